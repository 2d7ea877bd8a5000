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

#include "extors/lattice.hpp"

namespace extors::lattice {

LatticeClass LatticeClass::basis_vector(Lattice lat, int i) {
  if (i < 1 || i > lat.rank) throw std::invalid_argument("index out of range");
  std::vector<long long> d(lat.rank, 0);
  d[i - 1] = 1;
  return LatticeClass(lat, std::move(d));
}

IndexSet IndexSet::from_indices(int b, const std::vector<int>& indices) {
  std::uint64_t mask = 0;
  for (int i : indices) {
    if (i < 1 || i > b) throw std::invalid_argument("index out of range");
    mask |= std::uint64_t{1} << (i - 1);
  }
  return IndexSet(b, mask);
}

int IndexSet::size() const {
  int n = 0;
  for (int i = 1; i <= b; ++i)
    if (contains(i)) ++n;
  return n;
}

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= b; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

long long intersection(const LatticeClass& u, const LatticeClass& v) {
  if (!(u.lattice == v.lattice))
    throw std::invalid_argument("rank mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < u.coords.size(); ++i)
    s += u.coords[i] * v.coords[i];
  return -s;
}

LatticeClass canonical_class(Lattice lat) {
  return LatticeClass(lat, std::vector<long long>(lat.rank, 1));
}

long long canonical_pairing(const LatticeClass& d) {
  long long s = 0;
  for (long long x : d.coords) s += x;
  return -s;
}

long long defect(const IndexSet& j, const LatticeClass& d) {
  if (j.b != d.lattice.rank) throw std::invalid_argument("rank mismatch");
  long long value = 0;
  for (int i = 1; i <= j.b; ++i) {
    long long di = d.coords[i - 1];
    if (j.contains(i)) value += di;
    value -= di * di;
  }
  return value;
}

std::vector<LatticeClass> zero_defect_classes(const IndexSet& j) {
  Lattice lat(j.b);
  std::vector<int> members = j.indices();
  std::vector<LatticeClass> out;
  out.reserve(std::size_t{1} << members.size());
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << members.size());
       ++sub) {
    std::vector<long long> d(j.b, 0);
    for (std::size_t k = 0; k < members.size(); ++k)
      if ((sub >> k) & 1) d[members[k] - 1] = 1;
    out.emplace_back(lat, std::move(d));
  }
  return out;
}

std::vector<LatticeClass> cycle_classes(int b) {
  if (b < 2) throw std::invalid_argument("cycle needs rank >= 2");
  Lattice lat(b);
  std::vector<LatticeClass> out;
  out.reserve(b);
  for (int i = 0; i < b; ++i) {
    std::vector<long long> d(b, 0);
    d[i] += 1;
    d[(i + 1) % b] -= 1;
    out.emplace_back(lat, std::move(d));
  }
  return out;
}

CyclePairingReport check_cycle_span_pairing(const LatticeClass& d,
                                            EnokiType type) {
  const int b = d.lattice.rank;
  long long coord_sum = 0;
  for (long long x : d.coords) coord_sum += x;
  long long pairing = -coord_sum;
  bool in_span, criterion;
  if (type == EnokiType::generic) {
    // The cycle classes span exactly the sum-zero sublattice.
    in_span = coord_sum == 0;
    criterion = pairing == 0;
  } else {
    // Adding the elliptic class -sum e_i extends the span to sum = 0 mod b.
    in_span = coord_sum % b == 0;
    criterion = pairing % b == 0;
  }
  return CyclePairingReport{pairing, in_span, in_span == criterion};
}

std::optional<int> select_crossing_index(const IndexSet& j) {
  if (j.mask == 0) return std::nullopt;
  if (j.size() == j.b) return std::nullopt;
  for (int sigma = 1; sigma <= j.b; ++sigma) {
    int next = sigma == j.b ? 1 : sigma + 1;
    if (!j.contains(sigma) && j.contains(next)) return sigma;
  }
  return std::nullopt;  // unreachable for proper nonempty J
}

ExhaustiveReport exhaustive_check(int b, int bound) {
  if (b < 1 || b > 6 || bound < 1 || bound > 5)
    throw std::invalid_argument("budget exceeded (need b <= 6, bound <= 5)");
  ExhaustiveReport report;
  report.b = b;
  report.bound = bound;
  Lattice lat(b);
  LatticeClass k = canonical_class(lat);

  std::vector<long long> d(b, -bound);
  const long long width = 2 * bound + 1;
  std::uint64_t total = 1;
  for (int i = 0; i < b; ++i) total *= width;

  for (std::uint64_t step = 0; step < total; ++step) {
    std::uint64_t s = step;
    for (int i = 0; i < b; ++i) {
      d[i] = static_cast<long long>(s % width) - bound;
      s /= width;
    }
    LatticeClass cls(lat, d);
    long long self = intersection(cls, cls);
    bool is_zero = true;
    for (long long x : d)
      if (x != 0) is_zero = false;
    if (!is_zero && self >= 0) report.negative_definite = false;
    if (((self - intersection(cls, k)) % 2 + 2) % 2 != 0)
      report.characteristic_congruence = false;

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b); ++mask) {
      IndexSet j(b, mask);
      long long def = defect(j, cls);
      ++report.classes_checked;
      if (def > 0) report.defect_nonpositive = false;
      bool indicator = true;
      for (int i = 1; i <= b; ++i) {
        long long di = d[i - 1];
        if (j.contains(i) ? (di != 0 && di != 1) : (di != 0))
          indicator = false;
      }
      if ((def == 0) != indicator) report.equality_classes_exact = false;
      if (def == 0) ++report.zero_defect_total;
    }
  }
  // Cross-check the zero-defect count: sum over J of 2^|J| = 3^b, since
  // bound >= 1 keeps every indicator vector inside the sweep.
  std::uint64_t expected = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << b); ++mask)
    expected += std::uint64_t{1} << IndexSet(b, mask).size();
  if (report.zero_defect_total != expected)
    report.equality_classes_exact = false;
  return report;
}

}  // namespace extors::lattice
