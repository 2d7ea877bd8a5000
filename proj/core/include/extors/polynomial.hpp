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

#include <optional>
#include <utility>

#include "extors/ring.hpp"

namespace extors {

/// Exact multivariate polynomial over QQ. Terms are kept sorted descending
/// by the ring's order with no zero coefficients.
class Polynomial {
 public:
  struct Term {
    Monomial mon;
    Rational coeff;
  };

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, Rational value);
  static Polynomial one(RingPtr ring) {
    return constant(std::move(ring), Rational(1));
  }
  static Polynomial variable(RingPtr ring, std::size_t index, int exp = 1);
  static Polynomial from_term(RingPtr ring, Monomial mon, Rational coeff);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].mon.is_one() &&
           terms_[0].coeff == 1;
  }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mon; }
  const Rational& leading_coeff() const { return terms_.front().coeff; }
  int total_degree() const;  // -1 for the zero polynomial

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  Polynomial scaled(const Rational& c) const;
  /// this * (c * mon), one term at a time; the workhorse of reduction.
  Polynomial times_term(const Monomial& mon, const Rational& c) const;

  /// Leading coefficient scaled to 1.
  Polynomial monic() const;

  /// gcd of the numerators over the lcm of the denominators, signed like
  /// the leading coefficient; zero for the zero polynomial. Dividing by it
  /// gives coprime integer coefficients with positive lead.
  Rational content() const;
  Polynomial primitive_part() const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

 private:
  void normalize();

  RingPtr ring_;
  std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& f) {
  return f.scaled(c);
}

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division: f = sum quotients[i]*divisors[i] + remainder, and
/// no term of the remainder is divisible by any divisor's leading monomial.
DivisionResult divide_multi(const Polynomial& f,
                            const std::vector<Polynomial>& divisors);

/// Remainder of f modulo the divisor list.
Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& divisors);

bool divides_exactly(const Polynomial& divisor, const Polynomial& f);
/// f / divisor; throws std::invalid_argument when the division is not exact.
Polynomial exact_quotient(const Polynomial& f, const Polynomial& divisor);

}  // namespace extors
