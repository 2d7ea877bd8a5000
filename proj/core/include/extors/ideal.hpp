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

#include <mutex>

#include "extors/polynomial.hpp"

namespace extors {

/// Reduced Groebner basis of the ideal generated by gens: monic,
/// auto-reduced, sorted descending by leading monomial. Canonical for the
/// (ideal, order) pair. Empty input gives the empty basis of the zero ideal.
std::vector<Polynomial> groebner(RingPtr ring,
                                 const std::vector<Polynomial>& gens);

/// Finite generator list with a lazily computed reduced Groebner basis.
/// Values are immutable; the basis cache is initialize-once and shared
/// between copies.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Polynomial>& basis() const;

  bool is_zero() const { return basis().empty(); }
  bool is_unit() const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool same_ideal_as(const Ideal& other) const;
  Polynomial reduce(const Polynomial& f) const;

 private:
  struct Cache {
    std::once_flag flag;
    std::vector<Polynomial> gb;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

Ideal ideal_intersection(const Ideal& a, const Ideal& b);

/// Monic generator of (f) `intersect` (g), computed by eliminating an
/// auxiliary variable.
Polynomial lcm_poly(const Polynomial& f, const Polynomial& g);

/// Monic gcd via f*g / lcm(f,g); gcd(f, 0) is the normalized f.
Polynomial gcd_poly(const Polynomial& f, const Polynomial& g);

/// Monic gcd of the generators of a nonzero ideal: the generator of the
/// smallest principal ideal containing it (the divisorial part). The result
/// is recomputed from the reduced basis as a self-check.
Polynomial gcd_of_ideal(const Ideal& ideal);

}  // namespace extors
