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

#include "extors/ideal.hpp"

#include <algorithm>
#include <set>

namespace extors {

namespace {

struct Pair {
  Monomial lcm;
  std::size_t i, j;  // i < j
};

struct PairLess {
  const MonomialOrder* order;
  bool operator()(const Pair& a, const Pair& b) const {
    int c = order->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;  // normal strategy: smallest lcm first
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::uint64_t pair_key(std::size_t i, std::size_t j) {
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const Monomial& lcm) {
  Monomial qf = f.leading_monomial().quotient_of(lcm);
  Monomial qg = g.leading_monomial().quotient_of(lcm);
  return f.times_term(qf, Rational(1) / f.leading_coeff()) -
         g.times_term(qg, Rational(1) / g.leading_coeff());
}

// Normal form where only the zero-or-not outcome and the leading structure
// matter: the work polynomial is periodically stripped to coprime integer
// coefficients, containing the rational swell of long reduction cascades.
Polynomial reduce_scale_free(Polynomial work,
                             const std::vector<Polynomial>& basis) {
  const RingPtr ring = work.ring();
  Polynomial rem(ring);
  std::size_t steps = 0;
  while (!work.is_zero()) {
    if (++steps % 8 == 0) {
      Polynomial whole = work + rem;
      if (!whole.is_zero()) {
        Rational c = whole.content();
        if (c != 1) {
          Rational inv = Rational(1) / c;
          work = work.scaled(inv);
          rem = rem.scaled(inv);
        }
      }
    }
    const auto& lt = work.leading_term();
    bool hit = false;
    for (const Polynomial& b : basis) {
      if (b.leading_monomial().divides(lt.mon)) {
        Monomial q = b.leading_monomial().quotient_of(lt.mon);
        work -= b.times_term(q, lt.coeff / b.leading_coeff());
        hit = true;
        break;
      }
    }
    if (!hit) {
      rem += Polynomial::from_term(ring, lt.mon, lt.coeff);
      work -= Polynomial::from_term(ring, lt.mon, lt.coeff);
    }
  }
  return rem;
}

// Minimalize + monic + tail-reduce + canonical sort.
std::vector<Polynomial> reduce_basis(RingPtr ring,
                                     std::vector<Polynomial> basis) {
  const MonomialOrder& order = ring->order();
  // Drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& mi = basis[i].leading_monomial();
      const Monomial& mj = basis[j].leading_monomial();
      if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i].monic());
  }
  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(others.empty() ? minimal[i]
                                     : normal_form(minimal[i], others));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return order.greater(a.leading_monomial(), b.leading_monomial());
            });
  return reduced;
}

}  // namespace

std::vector<Polynomial> groebner(RingPtr ring,
                                 const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens) {
    require_same_ring(*ring, *g.ring());
    Polynomial r = basis.empty() ? g : reduce_scale_free(g, basis);
    if (!r.is_zero()) basis.push_back(r.primitive_part());
  }
  if (basis.empty()) return {};

  PairLess less{&ring->order()};
  std::set<Pair, PairLess> queue(less);
  std::set<std::uint64_t> done;
  auto enqueue = [&](std::size_t i, std::size_t j) {
    queue.insert(Pair{Monomial::lcm(basis[i].leading_monomial(),
                                    basis[j].leading_monomial()),
                      i, j});
  };
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) enqueue(i, j);

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    done.insert(pair_key(p.i, p.j));
    const Monomial& mi = basis[p.i].leading_monomial();
    const Monomial& mj = basis[p.j].leading_monomial();
    // Buchberger's first criterion: coprime leading monomials.
    if (mi.coprime_with(mj)) continue;
    // Chain criterion.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (basis[k].leading_monomial().divides(p.lcm) &&
          done.count(pair_key(std::min(p.i, k), std::max(p.i, k))) &&
          done.count(pair_key(std::min(p.j, k), std::max(p.j, k))))
        skip = true;
    }
    if (skip) continue;
    Polynomial s = reduce_scale_free(
        s_polynomial(basis[p.i], basis[p.j], p.lcm), basis);
    if (s.is_zero()) continue;
    basis.push_back(s.primitive_part());
    for (std::size_t i = 0; i + 1 < basis.size(); ++i)
      enqueue(i, basis.size() - 1);
  }
  return reduce_basis(ring, std::move(basis));
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)),
      gens_(std::move(gens)),
      cache_(std::make_shared<Cache>()) {
  for (const Polynomial& g : gens_) require_same_ring(*ring_, *g.ring());
}

const std::vector<Polynomial>& Ideal::basis() const {
  std::call_once(cache_->flag,
                 [this] { cache_->gb = groebner(ring_, gens_); });
  return cache_->gb;
}

bool Ideal::is_unit() const {
  const auto& gb = basis();
  return gb.size() == 1 && gb[0].is_one();
}

bool Ideal::contains(const Polynomial& f) const {
  require_same_ring(*ring_, *f.ring());
  return reduce(f).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  for (const Polynomial& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::same_ideal_as(const Ideal& other) const {
  // Reduced bases are canonical, so basis equality decides.
  return basis() == other.basis();
}

Polynomial Ideal::reduce(const Polynomial& f) const {
  const auto& gb = basis();
  return gb.empty() ? f : normal_form(f, gb);
}

namespace {

// Shift a polynomial into the ring with one auxiliary variable prepended,
// optionally multiplying by t^aux_deg * (prefactor in t).
Polynomial lift_to_aux(const Polynomial& f, const RingPtr& ext) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    std::vector<int> e(ext->nvars(), 0);
    for (std::size_t i = 0; i < t.mon.nvars(); ++i) e[i + 1] = t.mon.exponent(i);
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial(ext, std::move(terms));
}

Polynomial drop_aux(const Polynomial& f, const RingPtr& base) {
  std::vector<Polynomial::Term> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    std::vector<int> e(base->nvars());
    for (std::size_t i = 0; i < base->nvars(); ++i) e[i] = t.mon.exponent(i + 1);
    terms.push_back({Monomial(std::move(e)), t.coeff});
  }
  return Polynomial(base, std::move(terms));
}

}  // namespace

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring());
  RingPtr base = a.ring();
  std::vector<std::string> vars;
  vars.reserve(base->nvars() + 1);
  vars.push_back("@t");  // reserved, not expressible in the text grammar
  for (const auto& v : base->vars()) vars.push_back(v);
  RingPtr ext = PolyRing::make(std::move(vars), MonomialOrder::elimination({1}));

  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::one(ext) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.generators())
    if (!f.is_zero()) gens.push_back(t * lift_to_aux(f, ext));
  for (const Polynomial& g : b.generators())
    if (!g.is_zero()) gens.push_back(one_minus_t * lift_to_aux(g, ext));

  std::vector<Polynomial> result;
  for (const Polynomial& g : groebner(ext, gens)) {
    bool has_aux = false;
    for (const auto& term : g.terms())
      if (term.mon.exponent(0) != 0) {
        has_aux = true;
        break;
      }
    if (!has_aux) result.push_back(drop_aux(g, base));
  }
  return Ideal(base, std::move(result));
}

Polynomial lcm_poly(const Polynomial& f, const Polynomial& g) {
  require_same_ring(*f.ring(), *g.ring());
  if (f.is_zero() || g.is_zero()) return Polynomial(f.ring());
  Ideal meet = ideal_intersection(Ideal(f.ring(), {f}), Ideal(f.ring(), {g}));
  const auto& gb = meet.basis();
  if (gb.size() != 1)
    throw std::logic_error("intersection of principal ideals not principal");
  return gb[0];  // reduced basis elements are monic
}

Polynomial gcd_poly(const Polynomial& f, const Polynomial& g) {
  require_same_ring(*f.ring(), *g.ring());
  if (f.is_zero() && g.is_zero())
    throw std::invalid_argument("gcd(0, 0) is undefined");
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  Polynomial l = lcm_poly(f, g);
  return exact_quotient(f * g, l).monic();
}

Polynomial gcd_of_ideal(const Ideal& ideal) {
  auto fold =
      [](const std::vector<Polynomial>& polys) -> std::optional<Polynomial> {
    std::optional<Polynomial> acc;
    for (const Polynomial& f : polys) {
      if (f.is_zero()) continue;
      acc = acc ? gcd_poly(*acc, f) : f.monic();
      if (acc->is_one()) break;  // cannot get smaller
    }
    return acc;
  };
  std::optional<Polynomial> from_gens = fold(ideal.generators());
  if (!from_gens) throw std::invalid_argument("gcd of the zero ideal");
  std::optional<Polynomial> from_basis = fold(ideal.basis());
  if (!from_basis || *from_gens != *from_basis)
    throw std::logic_error("gcd_of_ideal disagrees between generating sets");
  return *from_gens;
}

}  // namespace extors
