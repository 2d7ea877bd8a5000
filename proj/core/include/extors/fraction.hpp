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

#include "extors/ideal.hpp"
#include "extors/matrix.hpp"

namespace extors {

/// Element of the fraction field of the polynomial ring, normalized so the
/// denominator is monic and coprime to the numerator.
class RationalFunction {
 public:
  explicit RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction zero(const RingPtr& ring) {
    return RationalFunction(Polynomial(ring));
  }
  static RationalFunction one(const RingPtr& ring) {
    return RationalFunction(Polynomial::one(ring));
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;

  bool operator==(const RationalFunction& o) const;

 private:
  void normalize();

  Polynomial num_, den_;
};

/// Solves m * x = b over the fraction field by Gaussian elimination;
/// nullopt when b is outside the column span.
std::optional<std::vector<RationalFunction>> solve_over_fractions(
    const PolyMatrix& m, const Vec& b);

}  // namespace extors
