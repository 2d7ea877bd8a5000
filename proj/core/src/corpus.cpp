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

#include "extors/corpus.hpp"

namespace extors {

namespace {

Monomial random_monomial(Rng& rng, const RingPtr& ring, int max_degree) {
  int total = static_cast<int>(rng.below(max_degree + 1));
  std::vector<int> exps(ring->nvars(), 0);
  int remaining = total;
  for (std::size_t i = 0; i + 1 < ring->nvars(); ++i) {
    exps[i] = static_cast<int>(rng.below(remaining + 1));
    remaining -= exps[i];
  }
  exps[ring->nvars() - 1] = remaining;
  return Monomial(std::move(exps));
}

Rational random_coeff(Rng& rng) {
  long num = static_cast<long>(rng.range(-3, 3));
  if (num == 0) num = 1;
  long den = rng.chance(1, 4) ? 2 : 1;
  return make_rational(num, den);
}

}  // namespace

Polynomial random_polynomial(Rng& rng, const RingPtr& ring, int max_degree,
                             int max_terms, bool ensure_nonzero) {
  while (true) {
    std::size_t nterms = 1 + rng.below(max_terms);
    std::vector<Polynomial::Term> terms;
    terms.reserve(nterms);
    for (std::size_t t = 0; t < nterms; ++t)
      terms.push_back({random_monomial(rng, ring, max_degree),
                       random_coeff(rng)});
    Polynomial p(ring, std::move(terms));
    if (!ensure_nonzero || !p.is_zero()) return p;
  }
}

Polynomial random_nonunit(Rng& rng, const RingPtr& ring, int max_degree) {
  while (true) {
    Polynomial p = random_polynomial(rng, ring, max_degree, 3, true);
    if (p.total_degree() >= 1) return p;
  }
}

namespace {

// Upper-triangular presentation with nonzero diagonal: the cokernel is
// torsion (the determinant annihilates it).
PolyMatrix triangular_presentation(Rng& rng, const RingPtr& ring,
                                   std::size_t rank) {
  PolyMatrix m(ring, rank, rank);
  for (std::size_t i = 0; i < rank; ++i) {
    m.at(i, i) = random_nonunit(rng, ring, 3);
    for (std::size_t j = i + 1; j < rank; ++j)
      if (rng.chance(1, 2))
        m.at(i, j) = random_polynomial(rng, ring, 2, 2, false);
  }
  return m;
}

PolyMatrix append_redundant_columns(Rng& rng, PolyMatrix m,
                                    std::size_t extras) {
  const RingPtr& ring = m.ring();
  for (std::size_t e = 0; e < extras && m.cols() < 5; ++e) {
    PolyMatrix wider(ring, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) wider.at(i, j) = m.at(i, j);
    // Random constant combination of two existing columns, keeping the
    // degree cap intact.
    std::size_t a = rng.below(m.cols());
    std::size_t b = rng.below(m.cols());
    Polynomial ca = Polynomial::constant(ring, random_coeff(rng));
    Polynomial cb = Polynomial::constant(ring, random_coeff(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      wider.at(i, m.cols()) = ca * m.at(i, a) + cb * m.at(i, b);
    m = std::move(wider);
  }
  return m;
}

PolyMatrix shuffle_columns(Rng& rng, const PolyMatrix& m) {
  std::vector<std::size_t> perm(m.cols());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[rng.below(i)]);
  PolyMatrix out(m.ring(), m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      out.at(i, j) = m.at(i, perm[j]);
  return out;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t profile,
                  std::uint64_t index) {
  std::uint64_t h = seed * 0x9E3779B97F4A7C15ULL;
  h ^= (profile + 1) * 0xBF58476D1CE4E5B9ULL;
  h ^= (index + 1) * 0x94D049BB133111EBULL;
  return h;
}

}  // namespace

FPModule corpus_module(const RingPtr& ring, std::uint64_t seed,
                       CorpusProfile profile, std::size_t index) {
  Rng rng(mix(seed, static_cast<std::uint64_t>(profile), index));
  switch (profile) {
    case CorpusProfile::free_module: {
      std::size_t rank = 1 + rng.below(3);
      PolyMatrix pres(ring, rank, 0);
      if (rng.chance(1, 3)) pres = PolyMatrix(ring, rank, 1);  // zero column
      return FPModule(std::move(pres));
    }
    case CorpusProfile::torsion: {
      std::size_t rank = 1 + rng.below(3);
      PolyMatrix pres = triangular_presentation(rng, ring, rank);
      if (rng.chance(1, 2))
        pres = append_redundant_columns(rng, std::move(pres),
                                        1 + rng.below(2));
      if (rng.chance(1, 2)) pres = shuffle_columns(rng, pres);
      return FPModule(std::move(pres));
    }
    case CorpusProfile::mixed: {
      std::size_t torsion_rank = 1 + rng.below(2);
      std::size_t free_rank = 1 + rng.below(3 - torsion_rank);
      PolyMatrix block = triangular_presentation(rng, ring, torsion_rank);
      PolyMatrix pres(ring, torsion_rank + free_rank, block.cols());
      for (std::size_t i = 0; i < torsion_rank; ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
          pres.at(i, j) = block.at(i, j);
      if (rng.chance(1, 2))
        pres = append_redundant_columns(rng, std::move(pres), 1);
      if (rng.chance(1, 2)) pres = shuffle_columns(rng, pres);
      return FPModule(std::move(pres));
    }
  }
  throw std::logic_error("unknown profile");
}

std::vector<FPModule> corpus_generate(const RingPtr& ring, std::uint64_t seed,
                                      std::size_t count,
                                      CorpusProfile profile) {
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  std::vector<FPModule> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(corpus_module(ring, seed, profile, i));
  return out;
}

RingPtr corpus_ring_univariate() {
  return PolyRing::make({"x"}, MonomialOrder::grevlex());
}

RingPtr corpus_ring_bivariate() {
  return PolyRing::make({"x", "y"}, MonomialOrder::grevlex());
}

}  // namespace extors
