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

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace extors {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical fraction; the two-argument mpq_class constructor does not
/// normalize on its own.
inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Exponent vector of a power product. The length is fixed by the ring.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents)
      : exps_(std::move(exponents)) {}

  static Monomial one(std::size_t nvars) {
    return Monomial(std::vector<int>(nvars, 0));
  }

  std::size_t nvars() const { return exps_.size(); }
  int exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  int total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), 0);
  }

  bool is_one() const {
    for (int e : exps_)
      if (e != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    std::vector<int> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
    return Monomial(std::move(e));
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  /// Quotient other/this; caller must ensure divisibility.
  Monomial quotient_of(const Monomial& numerator) const {
    std::vector<int> e(numerator.exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= exps_[i];
    return Monomial(std::move(e));
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exps_);
    for (std::size_t i = 0; i < e.size(); ++i)
      e[i] = std::max(e[i], b.exps_[i]);
    return Monomial(std::move(e));
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exps_);
    for (std::size_t i = 0; i < e.size(); ++i)
      e[i] = std::min(e[i], b.exps_[i]);
    return Monomial(std::move(e));
  }

  bool coprime_with(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0 && other.exps_[i] > 0) return false;
    return true;
  }

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

 private:
  std::vector<int> exps_;
};

/// A total, multiplicative well-order on monomials.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, {}); }
  /// Block order: the leading blocks dominate, grevlex inside each block.
  /// Variables past the last block form an implicit final block.
  static MonomialOrder elimination(std::vector<std::size_t> blocks) {
    return MonomialOrder(Kind::elimination, std::move(blocks));
  }

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& blocks() const { return blocks_; }

  /// Three-way comparison: >0 if a comes after b in the order (a > b).
  int compare(const Monomial& a, const Monomial& b) const;

  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) > 0;
  }
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  std::string name() const;

  bool operator==(const MonomialOrder& other) const {
    return kind_ == other.kind_ && blocks_ == other.blocks_;
  }

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> blocks)
      : kind_(kind), blocks_(std::move(blocks)) {}

  static int grevlex_compare_range(const Monomial& a, const Monomial& b,
                                   std::size_t lo, std::size_t hi);

  Kind kind_;
  std::vector<std::size_t> blocks_;
};

/// Ring context: QQ[vars] with a fixed monomial order. Immutable; shared by
/// every value built over it.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> vars, MonomialOrder order)
      : vars_(std::move(vars)), order_(std::move(order)) {
    if (vars_.empty())
      throw std::invalid_argument("ring needs at least one variable");
  }

  static std::shared_ptr<const PolyRing> make(std::vector<std::string> vars,
                                              MonomialOrder order) {
    return std::make_shared<const PolyRing>(std::move(vars),
                                            std::move(order));
  }

  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const MonomialOrder& order() const { return order_; }

  bool same_as(const PolyRing& other) const {
    return vars_ == other.vars_ && order_ == other.order_;
  }

 private:
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline void require_same_ring(const PolyRing& a, const PolyRing& b) {
  if (!a.same_as(b)) throw std::invalid_argument("ring context mismatch");
}

}  // namespace extors
