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

#include "extors/polynomial.hpp"

#include <algorithm>

namespace extors {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  const MonomialOrder& order = ring_->order();
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.mon, b.mon);
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mon == t.mon) {
      merged.back().coeff += t.coeff;
      if (merged.back().coeff == 0) merged.pop_back();
    } else if (t.coeff != 0) {
      merged.push_back(std::move(t));
    }
  }
  terms_ = std::move(merged);
}

Polynomial Polynomial::constant(RingPtr ring, Rational value) {
  Polynomial p(ring);
  if (value != 0)
    p.terms_.push_back({Monomial::one(ring->nvars()), std::move(value)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index, int exp) {
  std::vector<int> e(ring->nvars(), 0);
  e.at(index) = exp;
  Polynomial p(ring);
  p.terms_.push_back({Monomial(std::move(e)), Rational(1)});
  return p;
}

Polynomial Polynomial::from_term(RingPtr ring, Monomial mon, Rational coeff) {
  Polynomial p(ring);
  if (coeff != 0) p.terms_.push_back({std::move(mon), std::move(coeff)});
  return p;
}

int Polynomial::total_degree() const {
  int deg = -1;
  for (const Term& t : terms_) deg = std::max(deg, t.mon.total_degree());
  return deg;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(*ring_, *other.ring_);
  const MonomialOrder& order = ring_->order();
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    if (j == other.terms_.size() ||
        (i < terms_.size() &&
         order.greater(terms_[i].mon, other.terms_[j].mon))) {
      out.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() ||
               order.greater(other.terms_[j].mon, terms_[i].mon)) {
      out.terms_.push_back(other.terms_[j++]);
    } else {
      Rational c = terms_[i].coeff + other.terms_[j].coeff;
      if (c != 0) out.terms_.push_back({terms_[i].mon, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  *this = *this + other;
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  *this = *this - other;
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(*ring_, *other.ring_);
  std::vector<Term> prods;
  prods.reserve(terms_.size() * other.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : other.terms_)
      prods.push_back({a.mon * b.mon, a.coeff * b.coeff});
  return Polynomial(ring_, std::move(prods));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial out(*this);
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Polynomial Polynomial::times_term(const Monomial& mon,
                                  const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.push_back({t.mon * mon, t.coeff * c});
  return out;  // multiplying by a fixed monomial preserves the sorting
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading_coeff());
}

Rational Polynomial::content() const {
  if (is_zero()) return Rational(0);
  Integer num(0), den(1);
  for (const Term& t : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(num, den);
  c.canonicalize();
  if (leading_coeff() < 0) c = -c;
  return c;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / content());
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!ring_->same_as(*other.ring_) || terms_.size() != other.terms_.size())
    return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mon != other.terms_[i].mon ||
        terms_[i].coeff != other.terms_[i].coeff)
      return false;
  return true;
}

DivisionResult divide_multi(const Polynomial& f,
                            const std::vector<Polynomial>& divisors) {
  if (divisors.empty()) throw std::invalid_argument("empty divisor list");
  for (const Polynomial& d : divisors) {
    require_same_ring(*f.ring(), *d.ring());
    if (d.is_zero()) throw std::invalid_argument("zero divisor");
  }
  DivisionResult res{std::vector<Polynomial>(divisors.size(),
                                             Polynomial(f.ring())),
                     Polynomial(f.ring())};
  Polynomial work = f;
  std::vector<Polynomial::Term> rem;
  while (!work.is_zero()) {
    const auto& lt = work.leading_term();
    bool reduced = false;
    for (std::size_t k = 0; k < divisors.size(); ++k) {
      const Polynomial& d = divisors[k];
      if (d.leading_monomial().divides(lt.mon)) {
        Monomial q = d.leading_monomial().quotient_of(lt.mon);
        Rational c = lt.coeff / d.leading_coeff();
        res.quotients[k] += Polynomial::from_term(f.ring(), q, c);
        work -= d.times_term(q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(lt);
      work -= Polynomial::from_term(f.ring(), lt.mon, lt.coeff);
    }
  }
  res.remainder = Polynomial(f.ring(), std::move(rem));
  return res;
}

Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& divisors) {
  if (divisors.empty()) return f;
  return divide_multi(f, divisors).remainder;
}

bool divides_exactly(const Polynomial& divisor, const Polynomial& f) {
  if (divisor.is_zero()) return f.is_zero();
  if (f.is_zero()) return true;
  return divide_multi(f, {divisor}).remainder.is_zero();
}

Polynomial exact_quotient(const Polynomial& f, const Polynomial& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero");
  if (f.is_zero()) return f;
  DivisionResult d = divide_multi(f, {divisor});
  if (!d.remainder.is_zero())
    throw std::invalid_argument("division is not exact");
  return d.quotients[0];
}

}  // namespace extors
