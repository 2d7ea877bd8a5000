// Copyright 2026 The extors Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace extors::lattice {

/// Rank-b lattice with basis (e_1, ..., e_b), e_i . e_j = -delta_ij; the
/// canonical class pairs as sum of the e_i.
struct Lattice {
  int rank;
  explicit Lattice(int b) : rank(b) {
    if (b < 1) throw std::invalid_argument("rank must be positive");
  }
  bool operator==(const Lattice& o) const { return rank == o.rank; }
};

/// Integer class sum d_i e_i.
struct LatticeClass {
  Lattice lattice;
  std::vector<long long> coords;

  LatticeClass(Lattice lat, std::vector<long long> d)
      : lattice(lat), coords(std::move(d)) {
    if (coords.size() != static_cast<std::size_t>(lattice.rank))
      throw std::invalid_argument("coordinate length must equal the rank");
  }
  static LatticeClass zero(Lattice lat) {
    return LatticeClass(lat, std::vector<long long>(lat.rank, 0));
  }
  static LatticeClass basis_vector(Lattice lat, int i);  // e_i, 1-based

  bool operator==(const LatticeClass& o) const { return coords == o.coords; }
};

/// Subset of {1, ..., b}, stored as a bitmask.
struct IndexSet {
  int b;
  std::uint64_t mask;

  IndexSet(int b_, std::uint64_t mask_) : b(b_), mask(mask_) {
    if (b < 1 || b > 63) throw std::invalid_argument("unsupported rank");
    if (mask >> b) throw std::invalid_argument("index out of range");
  }
  static IndexSet from_indices(int b, const std::vector<int>& indices);
  bool contains(int i) const { return (mask >> (i - 1)) & 1; }
  int size() const;
  std::vector<int> indices() const;
};

long long intersection(const LatticeClass& u, const LatticeClass& v);

LatticeClass canonical_class(Lattice lat);  // sum of the e_i

/// Pairing with the canonical class: -(sum of coordinates). A negative
/// value rules out effectivity on a minimal class VII surface.
long long canonical_pairing(const LatticeClass& d);

/// <-e_J, d> + d.d = sum_{j in J} d_j - sum_i d_i^2; always <= 0.
long long defect(const IndexSet& j, const LatticeClass& d);

/// The classes with defect zero: indicator vectors of subsets of J.
std::vector<LatticeClass> zero_defect_classes(const IndexSet& j);

/// Classes e_i - e_{i+1} (indices mod b) of the rational-curve cycle on an
/// Enoki surface; they sum to zero. Requires b >= 2.
std::vector<LatticeClass> cycle_classes(int b);

enum class EnokiType { generic, special };

struct CyclePairingReport {
  long long pairing;          // with the canonical class
  bool in_span;               // of the divisor-class lattice for the type
  bool consistent;            // pairing criterion matches span membership
};
/// Generic type: the divisor classes span the cycle classes and pair to 0
/// with the canonical class. Special type: the elliptic class -sum e_i is
/// added and the pairing is 0 mod b.
CyclePairingReport check_cycle_span_pairing(const LatticeClass& d,
                                            EnokiType type);

/// Least sigma outside J with sigma+1 in J (indices mod b), when J is
/// neither empty nor everything.
std::optional<int> select_crossing_index(const IndexSet& j);

struct ExhaustiveReport {
  int b;
  int bound;
  std::uint64_t classes_checked = 0;
  std::uint64_t zero_defect_total = 0;
  bool defect_nonpositive = true;
  bool equality_classes_exact = true;  // zero set == indicators, per J
  bool negative_definite = true;
  bool characteristic_congruence = true;  // d.d == d.K mod 2
  bool passed() const {
    return defect_nonpositive && equality_classes_exact &&
           negative_definite && characteristic_congruence;
  }
};
/// Sweeps every J and every |d_i| <= bound. Desk-scale budget: b <= 6,
/// bound <= 5.
ExhaustiveReport exhaustive_check(int b, int bound);

}  // namespace extors::lattice
