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
#include <optional>

#include "extors/polynomial.hpp"

namespace extors {

/// Element of a free module A^r, stored as r polynomial entries.
/// Module terms are ordered position-over-term: lower positions dominate,
/// ties broken by the ring's monomial order.
class Vec {
 public:
  Vec(RingPtr ring, std::size_t rank)
      : ring_(std::move(ring)), entries_(rank, Polynomial(ring_)) {}
  Vec(RingPtr ring, std::vector<Polynomial> entries);

  static Vec unit(RingPtr ring, std::size_t rank, std::size_t position);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return entries_.size(); }
  const Polynomial& operator[](std::size_t i) const { return entries_[i]; }
  Polynomial& entry(std::size_t i) { return entries_[i]; }
  const std::vector<Polynomial>& entries() const { return entries_; }

  bool is_zero() const;

  struct Lead {
    std::size_t pos;
    Monomial mon;
    Rational coeff;
  };
  /// Leading module term under position-over-term; nullopt when zero.
  std::optional<Lead> leading() const;

  Vec operator+(const Vec& other) const;
  Vec operator-(const Vec& other) const;
  Vec operator-() const;
  Vec& operator-=(const Vec& other);
  Vec scaled(const Polynomial& f) const;
  Vec scaled(const Rational& c) const;
  Vec times_term(const Monomial& mon, const Rational& c) const;

  bool operator==(const Vec& other) const { return entries_ == other.entries_; }
  bool operator!=(const Vec& other) const { return !(*this == other); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> entries_;
};

/// Position-over-term comparison of leading terms; zero vectors sort last.
int lead_compare(const std::optional<Vec::Lead>& a,
                 const std::optional<Vec::Lead>& b, const MonomialOrder& order);

/// Reduced module Groebner basis over A^r (Buchberger with the chain
/// criterion; S-pairs only between elements with the same leading position).
/// Each basis element optionally keeps its expression over the input
/// generators, which makes exact membership lifts available.
class ModuleGB {
 public:
  ModuleGB(RingPtr ring, std::size_t rank, std::vector<Vec> gens,
           bool track_lifts = true);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  std::size_t input_count() const { return input_count_; }
  const std::vector<Vec>& basis() const { return basis_; }

  /// Full normal form; when quotients is non-null it receives coefficients
  /// with v = sum quotients[i]*basis[i] + result.
  Vec normal_form(const Vec& v, std::vector<Polynomial>* quotients = nullptr)
      const;

  bool contains(const Vec& v) const { return normal_form(v).is_zero(); }

  /// Expression of a member over the original generators; nullopt when v is
  /// not in the module. Requires lift tracking.
  std::optional<std::vector<Polynomial>> express(const Vec& v) const;

 private:
  RingPtr ring_;
  std::size_t rank_;
  std::size_t input_count_;
  std::vector<Vec> basis_;
  std::vector<std::vector<Polynomial>> lifts_;  // per basis element
  bool tracked_;
};

/// Submodule of A^r given by generators, with a shared lazily built GB.
class Submodule {
 public:
  Submodule(RingPtr ring, std::size_t rank, std::vector<Vec> gens);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Vec>& generators() const { return gens_; }
  const ModuleGB& gb() const;

  bool is_zero() const { return gb().basis().empty(); }
  bool contains(const Vec& v) const;
  bool contains(const Submodule& other) const;
  bool equals(const Submodule& other) const;
  Vec reduce(const Vec& v) const { return gb().normal_form(v); }

  /// The full module A^r.
  static Submodule full(RingPtr ring, std::size_t rank);

 private:
  struct Cache {
    std::once_flag flag;
    std::optional<ModuleGB> gb;
  };

  RingPtr ring_;
  std::size_t rank_;
  std::vector<Vec> gens_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace extors
