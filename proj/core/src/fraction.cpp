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

#include "extors/fraction.hpp"

namespace extors {

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::one(num_.ring())) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::one(num_.ring());
    return;
  }
  Polynomial g = gcd_poly(num_, den_);
  if (!g.is_one()) {
    num_ = exact_quotient(num_, g);
    den_ = exact_quotient(den_, g);
  }
  // Monic denominator; push the scalar into the numerator.
  Rational lc = den_.leading_coeff();
  if (lc != 1) {
    den_ = den_.scaled(Rational(1) / lc);
    num_ = num_.scaled(Rational(1) / lc);
  }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out(*this);
  out.num_ = -out.num_;
  return out;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

std::optional<std::vector<RationalFunction>> solve_over_fractions(
    const PolyMatrix& m, const Vec& b) {
  const RingPtr& ring = m.ring();
  const std::size_t rows = m.rows(), cols = m.cols();
  if (b.rank() != rows) throw std::invalid_argument("rhs rank mismatch");

  // Augmented matrix [m | b] over the fraction field.
  std::vector<std::vector<RationalFunction>> a(
      rows, std::vector<RationalFunction>(cols + 1,
                                          RationalFunction::zero(ring)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j)
      a[i][j] = RationalFunction(m.at(i, j));
    a[i][cols] = RationalFunction(b[i]);
  }

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && a[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[row], a[piv]);
    RationalFunction inv =
        RationalFunction::one(ring) / a[row][col];
    for (std::size_t j = col; j <= cols; ++j) a[row][j] = a[row][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      RationalFunction factor = a[i][col];
      for (std::size_t j = col; j <= cols; ++j)
        a[i][j] = a[i][j] - factor * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i)
    if (!a[i][cols].is_zero()) return std::nullopt;  // inconsistent

  std::vector<RationalFunction> x(cols, RationalFunction::zero(ring));
  for (std::size_t i = 0; i < pivot_col.size(); ++i)
    x[pivot_col[i]] = a[i][cols];
  return x;
}

}  // namespace extors
