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

#include "extors/module_ops.hpp"

#include "extors/fraction.hpp"

namespace extors {

std::vector<PolyMatrix> free_resolution(const FPModule& n,
                                        std::size_t length) {
  if (length < 1) throw std::invalid_argument("resolution length must be >= 1");
  std::vector<PolyMatrix> out;
  out.reserve(length);
  out.push_back(n.presentation());
  for (std::size_t k = 1; k < length; ++k) out.push_back(syzygies(out.back()));
  return out;
}

namespace {

// Induced map Hom(F0, target) -> Hom(F1, target) on free covers: with
// vec(Phi) stacking columns (entry (i,j) at j*t + i), postcomposition with
// the source presentation P sends vec(Phi) to vec(Phi*P).
PolyMatrix induced_precomposition(const PolyMatrix& p, std::size_t t) {
  const RingPtr& ring = p.ring();
  PolyMatrix lambda(ring, t * p.cols(), t * p.rows());
  for (std::size_t k = 0; k < p.cols(); ++k)
    for (std::size_t j = 0; j < p.rows(); ++j)
      for (std::size_t i = 0; i < t; ++i)
        lambda.at(k * t + i, j * t + i) = p.at(j, k);
  return lambda;
}

std::vector<Vec> nonzero_block_projections(const PolyMatrix& syz,
                                           const RingPtr& ring,
                                           std::size_t block) {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < syz.cols(); ++j) {
    std::vector<Polynomial> entries;
    entries.reserve(block);
    for (std::size_t i = 0; i < block; ++i) entries.push_back(syz.at(i, j));
    Vec v(ring, std::move(entries));
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

HomModule::HomModule(FPModule source, FPModule target)
    : source_(std::move(source)),
      target_(std::move(target)),
      sub_([&]() -> Subquotient {
        require_same_ring(*source_.ring(), *target_.ring());
        const RingPtr& ring = source_.ring();
        const std::size_t s = source_.cover_rank();
        const std::size_t t = target_.cover_rank();
        const PolyMatrix& p = source_.presentation();
        const PolyMatrix& q = target_.presentation();

        PolyMatrix lambda = induced_precomposition(p, t);
        PolyMatrix target_block = PolyMatrix::block_diagonal(q, p.cols());
        PolyMatrix syz = syzygies(PolyMatrix::hcat(lambda, target_block));
        std::vector<Vec> gens = nonzero_block_projections(syz, ring, t * s);
        std::vector<Vec> rels =
            PolyMatrix::block_diagonal(q, s).columns();
        return Subquotient(ring, t * s, std::move(gens), std::move(rels));
      }()) {}

PolyMatrix HomModule::reshape(const Vec& flat) const {
  const std::size_t t = target_.cover_rank();
  PolyMatrix m(source_.ring(), t, source_.cover_rank());
  for (std::size_t j = 0; j < source_.cover_rank(); ++j)
    for (std::size_t i = 0; i < t; ++i) m.at(i, j) = flat[j * t + i];
  return m;
}

Vec HomModule::flatten(const PolyMatrix& m) const {
  const std::size_t t = target_.cover_rank();
  std::vector<Polynomial> entries(t * source_.cover_rank(),
                                  Polynomial(source_.ring()));
  for (std::size_t j = 0; j < source_.cover_rank(); ++j)
    for (std::size_t i = 0; i < t; ++i) entries[j * t + i] = m.at(i, j);
  return Vec(source_.ring(), std::move(entries));
}

ModuleHom HomModule::materialize(const Vec& coords) const {
  return ModuleHom(source_, target_, reshape(sub_.to_ambient(coords)));
}

ModuleHom HomModule::materialize_generator(std::size_t index) const {
  return materialize(
      Vec::unit(source_.ring(), sub_.ambient_gens().size(), index));
}

std::optional<Vec> HomModule::express(const PolyMatrix& hom_matrix) const {
  if (hom_matrix.rows() != target_.cover_rank() ||
      hom_matrix.cols() != source_.cover_rank())
    throw std::invalid_argument("hom matrix shape mismatch");
  return sub_.express(flatten(hom_matrix));
}

std::optional<Vec> HomModule::express(const ModuleHom& hom) const {
  return express(hom.matrix());
}

Ideal annihilator(const FPModule& n) {
  const RingPtr& ring = n.ring();
  std::optional<Ideal> acc;
  for (std::size_t i = 0; i < n.cover_rank(); ++i) {
    // {a : a*e_i lies in the relations}: first coordinate of the syzygies
    // of [e_i | presentation].
    PolyMatrix col(ring, n.cover_rank(), 1);
    col.at(i, 0) = Polynomial::one(ring);
    PolyMatrix syz = syzygies(PolyMatrix::hcat(col, n.presentation()));
    std::vector<Polynomial> gens;
    for (std::size_t j = 0; j < syz.cols(); ++j)
      if (!syz.at(0, j).is_zero()) gens.push_back(syz.at(0, j));
    Ideal ji(ring, std::move(gens));
    acc = acc ? ideal_intersection(*acc, ji) : ji;
  }
  if (!acc) return Ideal(ring, {Polynomial::one(ring)});  // zero module
  return *acc;
}

namespace {

SubmodulePart submodule_part_from_kernel(const FPModule& n,
                                         const Submodule& sub) {
  Subquotient pres(n.ring(), n.cover_rank(), sub.generators(),
                   n.presentation().columns());
  PolyMatrix incl_matrix = PolyMatrix::from_columns(
      n.ring(), n.cover_rank(), sub.generators());
  ModuleHom incl(pres.module(), n, std::move(incl_matrix));
  return SubmodulePart{sub, std::move(pres), std::move(incl)};
}

}  // namespace

SubmodulePart scalar_torsion(const FPModule& n, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("scalar must be nonzero");
  ModuleHom mult(n, n,
                 PolyMatrix::identity(n.ring(), n.cover_rank()).scaled(f));
  return submodule_part_from_kernel(n, kernel(mult));
}

SubmodulePart torsion_submodule(const FPModule& n) {
  const RingPtr& ring = n.ring();
  FPModule line = FPModule::free_module(ring, 1);
  HomModule duals(n, line);
  HomModule biduals(duals.module(), line);

  // The evaluation map at generator i of n is the functional sending the
  // j-th dual generator to its i-th ambient coordinate.
  const auto& dual_gens = duals.presentation().ambient_gens();
  PolyMatrix beta(ring, biduals.module().cover_rank(), n.cover_rank());
  for (std::size_t i = 0; i < n.cover_rank(); ++i) {
    PolyMatrix eval(ring, 1, dual_gens.size());
    for (std::size_t j = 0; j < dual_gens.size(); ++j)
      eval.at(0, j) = dual_gens[j][i];
    auto coords = biduals.express(eval);
    if (!coords)
      throw std::logic_error("evaluation functional escapes the bidual");
    for (std::size_t r = 0; r < beta.rows(); ++r) beta.at(r, i) = (*coords)[r];
  }
  ModuleHom into_bidual(n, biduals.module(), std::move(beta));
  return submodule_part_from_kernel(n, kernel(into_bidual));
}

bool is_torsion_module(const FPModule& n) {
  // Finitely generated over a Noetherian domain: torsion iff the
  // annihilator is nonzero.
  return !annihilator(n).is_zero();
}

bool is_torsion_free(const FPModule& n) {
  SubmodulePart tors = torsion_submodule(n);
  for (const Vec& g : tors.sub.generators())
    if (!n.relations().contains(g)) return false;
  return true;
}

QuotientByScalar quotient_by_scalar(const FPModule& n, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("scalar must be nonzero");
  ModuleHom mult(n, n,
                 PolyMatrix::identity(n.ring(), n.cover_rank()).scaled(f));
  CokernelResult ck = cokernel(mult);
  return QuotientByScalar{std::move(ck.module), std::move(ck.projection)};
}

FreeEmbedding embed_in_free(const FPModule& n) {
  if (!is_torsion_free(n))
    throw std::invalid_argument("module has torsion");
  const RingPtr& ring = n.ring();
  const std::size_t r0 = n.cover_rank();
  const PolyMatrix& p = n.presentation();

  // Greedy fraction-field basis among the generators, in generator order.
  std::vector<std::size_t> basis;
  std::vector<std::vector<RationalFunction>> coords(r0);
  for (std::size_t g = 0; g < r0; ++g) {
    std::vector<Vec> cols;
    cols.reserve(basis.size() + p.cols());
    for (std::size_t b : basis) cols.push_back(Vec::unit(ring, r0, b));
    for (std::size_t j = 0; j < p.cols(); ++j) cols.push_back(p.column(j));
    PolyMatrix m = PolyMatrix::from_columns(ring, r0, cols);
    auto sol = solve_over_fractions(m, Vec::unit(ring, r0, g));
    if (!sol) {
      basis.push_back(g);
      continue;
    }
    coords[g].assign(sol->begin(), sol->begin() + basis.size());
  }
  for (std::size_t k = 0; k < basis.size(); ++k) {
    coords[basis[k]].assign(basis.size(), RationalFunction::zero(ring));
    coords[basis[k]][k] = RationalFunction::one(ring);
  }
  for (auto& c : coords)
    c.resize(basis.size(), RationalFunction::zero(ring));

  Polynomial denom = Polynomial::one(ring);
  for (const auto& c : coords)
    for (const auto& x : c)
      if (!x.is_zero() && !x.den().is_one())
        denom = denom.is_one() ? x.den() : lcm_poly(denom, x.den());

  PolyMatrix emb(ring, basis.size(), r0);
  for (std::size_t g = 0; g < r0; ++g)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const RationalFunction& x = coords[g][j];
      if (x.is_zero()) continue;
      emb.at(j, g) = x.num() * exact_quotient(denom, x.den());
    }
  FPModule free = FPModule::free_module(ring, basis.size());
  ModuleHom embedding(n, free, std::move(emb));
  return FreeEmbedding{std::move(free), std::move(embedding),
                       std::move(denom)};
}

}  // namespace extors
