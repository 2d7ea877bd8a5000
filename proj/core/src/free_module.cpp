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

#include "extors/free_module.hpp"

#include <algorithm>
#include <set>

namespace extors {

Vec::Vec(RingPtr ring, std::vector<Polynomial> entries)
    : ring_(std::move(ring)), entries_(std::move(entries)) {
  for (const Polynomial& p : entries_) require_same_ring(*ring_, *p.ring());
}

Vec Vec::unit(RingPtr ring, std::size_t rank, std::size_t position) {
  Vec v(ring, rank);
  v.entries_.at(position) = Polynomial::one(ring);
  return v;
}

bool Vec::is_zero() const {
  for (const Polynomial& p : entries_)
    if (!p.is_zero()) return false;
  return true;
}

std::optional<Vec::Lead> Vec::leading() const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!entries_[i].is_zero())
      return Lead{i, entries_[i].leading_monomial(),
                  entries_[i].leading_coeff()};
  return std::nullopt;
}

Vec Vec::operator+(const Vec& other) const {
  Vec out(*this);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] += other.entries_[i];
  return out;
}

Vec Vec::operator-(const Vec& other) const {
  Vec out(*this);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] -= other.entries_[i];
  return out;
}

Vec Vec::operator-() const {
  Vec out(*this);
  for (auto& e : out.entries_) e = -e;
  return out;
}

Vec& Vec::operator-=(const Vec& other) {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] -= other.entries_[i];
  return *this;
}

Vec Vec::scaled(const Polynomial& f) const {
  Vec out(ring_, entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] * f;
  return out;
}

Vec Vec::scaled(const Rational& c) const {
  Vec out(*this);
  for (auto& e : out.entries_) e = e.scaled(c);
  return out;
}

Vec Vec::times_term(const Monomial& mon, const Rational& c) const {
  Vec out(ring_, entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i].times_term(mon, c);
  return out;
}

int lead_compare(const std::optional<Vec::Lead>& a,
                 const std::optional<Vec::Lead>& b,
                 const MonomialOrder& order) {
  if (!a && !b) return 0;
  if (!a) return -1;
  if (!b) return 1;
  if (a->pos != b->pos) return a->pos < b->pos ? 1 : -1;
  return order.compare(a->mon, b->mon);
}

namespace {

struct ModPair {
  Monomial lcm;
  std::size_t pos;
  std::size_t i, j;
};

struct ModPairLess {
  const MonomialOrder* order;
  bool operator()(const ModPair& a, const ModPair& b) const {
    int c = order->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.pos != b.pos) return a.pos < b.pos;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::uint64_t pair_key(std::size_t i, std::size_t j) {
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

struct Tracked {
  Vec v;
  std::vector<Polynomial> lift;
};

// Combined content of the coefficients of both vectors, signed like the
// first one's leading coefficient.
Rational combined_content(const Vec& v, const Vec& rem) {
  Integer num(0), den(1);
  auto absorb = [&](const Vec& w) {
    for (std::size_t i = 0; i < w.rank(); ++i)
      for (const auto& t : w[i].terms()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coeff.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
      }
  };
  absorb(v);
  absorb(rem);
  if (num == 0) return Rational(0);
  Rational c(num, den);
  c.canonicalize();
  if (v.leading() && v.leading()->coeff < 0) c = -c;
  return c;
}

void scale_all(Vec& v, Vec& rem, std::vector<Polynomial>& lift,
               const Rational& factor) {
  v = v.scaled(factor);
  rem = rem.scaled(factor);
  for (auto& l : lift) l = l.scaled(factor);
}

// Scale so the coefficients become coprime integers; the invariant
// v = sum lift_k * input_k holds up to one common factor applied to all
// three parts, which scale-insensitive callers discard anyway.
void make_primitive(Tracked& t) {
  if (t.v.is_zero()) return;
  Vec none(t.v.ring(), t.v.rank());
  Rational c = combined_content(t.v, none);
  if (c == 1) return;
  Rational inv = Rational(1) / c;
  t.v = t.v.scaled(inv);
  for (auto& l : t.lift) l = l.scaled(inv);
}

// Full normal form of v against the given elements, with lift bookkeeping.
// In scale-free mode the result is only meaningful up to a nonzero scalar:
// the work vector is periodically stripped to integer-primitive form,
// which is what keeps rational Buchberger cascades from exploding.
Tracked reduce_tracked(const RingPtr& ring, std::size_t rank,
                       const std::vector<Tracked>& basis, Vec v,
                       std::vector<Polynomial> lift, bool tracked,
                       bool scale_free) {
  Vec rem(ring, rank);
  std::size_t steps = 0;
  while (!v.is_zero()) {
    if (scale_free && ++steps % 8 == 0) {
      Rational c = combined_content(v, rem);
      if (c != 0 && c != 1) scale_all(v, rem, lift, Rational(1) / c);
    }
    auto lead = *v.leading();
    bool reduced = false;
    for (const Tracked& b : basis) {
      auto bl = *b.v.leading();
      if (bl.pos == lead.pos && bl.mon.divides(lead.mon)) {
        Monomial q = bl.mon.quotient_of(lead.mon);
        Rational c = lead.coeff / bl.coeff;
        v -= b.v.times_term(q, c);
        if (tracked) {
          Polynomial qp = Polynomial::from_term(ring, q, c);
          for (std::size_t k = 0; k < lift.size(); ++k)
            lift[k] -= qp * b.lift[k];
        }
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.entry(lead.pos) += Polynomial::from_term(ring, lead.mon, lead.coeff);
      v.entry(lead.pos) -= Polynomial::from_term(ring, lead.mon, lead.coeff);
    }
  }
  return Tracked{std::move(rem), std::move(lift)};
}

}  // namespace

ModuleGB::ModuleGB(RingPtr ring, std::size_t rank, std::vector<Vec> gens,
                   bool track_lifts)
    : ring_(std::move(ring)),
      rank_(rank),
      input_count_(gens.size()),
      tracked_(track_lifts) {
  const MonomialOrder& order = ring_->order();
  for (const Vec& g : gens) {
    if (g.rank() != rank_)
      throw std::invalid_argument("ambient rank mismatch among generators");
    require_same_ring(*ring_, *g.ring());
  }

  std::vector<Tracked> basis;
  auto unit_lift = [&](std::size_t i) {
    std::vector<Polynomial> l(
        tracked_ ? input_count_ : std::size_t{0}, Polynomial(ring_));
    if (tracked_) l[i] = Polynomial::one(ring_);
    return l;
  };

  ModPairLess less{&order};
  std::set<ModPair, ModPairLess> queue(less);
  std::set<std::uint64_t> done;
  auto enqueue = [&](std::size_t i, std::size_t j) {
    auto li = *basis[i].v.leading();
    auto lj = *basis[j].v.leading();
    if (li.pos != lj.pos) return;
    queue.insert(ModPair{Monomial::lcm(li.mon, lj.mon), li.pos, i, j});
  };

  for (std::size_t i = 0; i < gens.size(); ++i) {
    Tracked t = reduce_tracked(ring_, rank_, basis, gens[i], unit_lift(i),
                               tracked_, /*scale_free=*/true);
    if (t.v.is_zero()) continue;
    make_primitive(t);
    basis.push_back(std::move(t));
    for (std::size_t k = 0; k + 1 < basis.size(); ++k)
      enqueue(k, basis.size() - 1);
  }

  while (!queue.empty()) {
    ModPair p = *queue.begin();
    queue.erase(queue.begin());
    done.insert(pair_key(p.i, p.j));
    // Chain criterion only; the product criterion does not carry over to
    // modules.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      auto lk = *basis[k].v.leading();
      if (lk.pos == p.pos && lk.mon.divides(p.lcm) &&
          done.count(pair_key(std::min(p.i, k), std::max(p.i, k))) &&
          done.count(pair_key(std::min(p.j, k), std::max(p.j, k))))
        skip = true;
    }
    if (skip) continue;

    const Tracked& f = basis[p.i];
    const Tracked& g = basis[p.j];
    auto lf = *f.v.leading();
    auto lg = *g.v.leading();
    Monomial qf = lf.mon.quotient_of(p.lcm);
    Monomial qg = lg.mon.quotient_of(p.lcm);
    Vec s = f.v.times_term(qf, Rational(1) / lf.coeff) -
            g.v.times_term(qg, Rational(1) / lg.coeff);
    std::vector<Polynomial> lift;
    if (tracked_) {
      lift.assign(input_count_, Polynomial(ring_));
      Polynomial pf = Polynomial::from_term(ring_, qf, Rational(1) / lf.coeff);
      Polynomial pg = Polynomial::from_term(ring_, qg, Rational(1) / lg.coeff);
      for (std::size_t k = 0; k < input_count_; ++k)
        lift[k] = pf * f.lift[k] - pg * g.lift[k];
    }
    Tracked t = reduce_tracked(ring_, rank_, basis, std::move(s),
                               std::move(lift), tracked_,
                               /*scale_free=*/true);
    if (t.v.is_zero()) continue;
    make_primitive(t);
    basis.push_back(std::move(t));
    for (std::size_t k = 0; k + 1 < basis.size(); ++k)
      enqueue(k, basis.size() - 1);
  }

  // Minimalize: drop elements whose lead is divisible by another's, and
  // scale the survivors monic.
  std::vector<Tracked> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    auto li = *basis[i].v.leading();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      auto lj = *basis[j].v.leading();
      if (lj.pos == li.pos && lj.mon.divides(li.mon) &&
          (li.mon != lj.mon || j < i))
        redundant = true;
    }
    if (!redundant) {
      Rational inv = Rational(1) / li.coeff;
      Tracked t{basis[i].v.scaled(inv), basis[i].lift};
      for (auto& l : t.lift) l = l.scaled(inv);
      minimal.push_back(std::move(t));
    }
  }

  // Tail reduction. Leading terms are now pairwise non-divisible, so a
  // single pass yields the unique reduced basis. Exact arithmetic here:
  // the output must be the canonical monic representative.
  std::vector<Tracked> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Tracked> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(reduce_tracked(ring_, rank_, others, minimal[i].v,
                                     minimal[i].lift, tracked_,
                                     /*scale_free=*/false));
  }

  std::sort(reduced.begin(), reduced.end(),
            [&](const Tracked& a, const Tracked& b) {
              return lead_compare(a.v.leading(), b.v.leading(), order) > 0;
            });
  for (auto& t : reduced) {
    basis_.push_back(std::move(t.v));
    lifts_.push_back(std::move(t.lift));
  }
}

Vec ModuleGB::normal_form(const Vec& v,
                          std::vector<Polynomial>* quotients) const {
  if (v.rank() != rank_) throw std::invalid_argument("ambient rank mismatch");
  if (quotients) quotients->assign(basis_.size(), Polynomial(ring_));
  Vec work = v;
  Vec rem(ring_, rank_);
  while (!work.is_zero()) {
    auto lead = *work.leading();
    bool reduced = false;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      auto bl = *basis_[k].leading();
      if (bl.pos == lead.pos && bl.mon.divides(lead.mon)) {
        Monomial q = bl.mon.quotient_of(lead.mon);
        Rational c = lead.coeff / bl.coeff;
        work -= basis_[k].times_term(q, c);
        if (quotients) (*quotients)[k] += Polynomial::from_term(ring_, q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.entry(lead.pos) += Polynomial::from_term(ring_, lead.mon, lead.coeff);
      work.entry(lead.pos) -=
          Polynomial::from_term(ring_, lead.mon, lead.coeff);
    }
  }
  return rem;
}

std::optional<std::vector<Polynomial>> ModuleGB::express(const Vec& v) const {
  if (!tracked_) throw std::logic_error("lift tracking disabled");
  std::vector<Polynomial> quotients;
  Vec rem = normal_form(v, &quotients);
  if (!rem.is_zero()) return std::nullopt;
  std::vector<Polynomial> out(input_count_, Polynomial(ring_));
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (quotients[k].is_zero()) continue;
    for (std::size_t g = 0; g < input_count_; ++g)
      out[g] += quotients[k] * lifts_[k][g];
  }
  return out;
}

Submodule::Submodule(RingPtr ring, std::size_t rank, std::vector<Vec> gens)
    : ring_(std::move(ring)),
      rank_(rank),
      gens_(std::move(gens)),
      cache_(std::make_shared<Cache>()) {
  for (const Vec& g : gens_)
    if (g.rank() != rank_)
      throw std::invalid_argument("ambient rank mismatch among generators");
}

const ModuleGB& Submodule::gb() const {
  std::call_once(cache_->flag, [this] {
    cache_->gb.emplace(ring_, rank_, gens_, /*track_lifts=*/true);
  });
  return *cache_->gb;
}

bool Submodule::contains(const Vec& v) const { return gb().contains(v); }

bool Submodule::contains(const Submodule& other) const {
  if (rank_ != other.rank_) throw std::invalid_argument("ambient mismatch");
  for (const Vec& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

bool Submodule::equals(const Submodule& other) const {
  return contains(other) && other.contains(*this);
}

Submodule Submodule::full(RingPtr ring, std::size_t rank) {
  std::vector<Vec> gens;
  gens.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i)
    gens.push_back(Vec::unit(ring, rank, i));
  return Submodule(std::move(ring), rank, std::move(gens));
}

}  // namespace extors
