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

#include "extors/ext1.hpp"

namespace extors {

namespace {

Subquotient ext_subquotient(const PolyMatrix& m1, const PolyMatrix& m2) {
  const RingPtr& ring = m1.ring();
  const std::size_t c1 = m1.cols();
  // Cocycles: kernel of the transposed second differential.
  PolyMatrix cocycles = syzygies(m2.transpose());
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < cocycles.cols(); ++j) {
    Vec v = cocycles.column(j);
    if (!v.is_zero()) gens.push_back(std::move(v));
  }
  // Coboundaries: columns of the transposed first differential.
  std::vector<Vec> rels;
  PolyMatrix m1t = m1.transpose();
  for (std::size_t j = 0; j < m1t.cols(); ++j) rels.push_back(m1t.column(j));
  return Subquotient(ring, c1, std::move(gens), std::move(rels));
}

}  // namespace

Ext1Oracle::Ext1Oracle(const FPModule& n, PolyMatrix m1)
    : n_(n), m1_(std::move(m1)), m2_(syzygies(m1_)),
      sub_(ext_subquotient(m1_, m2_)) {}

Ext1Oracle::Ext1Oracle(const FPModule& n) : Ext1Oracle(n, n.presentation()) {}

Ext1Oracle::Ext1Oracle(const FPModule& n,
                       const std::vector<std::size_t>& column_perm)
    : Ext1Oracle(n, [&] {
        const PolyMatrix& p = n.presentation();
        if (column_perm.size() != p.cols())
          throw std::invalid_argument("permutation size mismatch");
        PolyMatrix shuffled(p.ring(), p.rows(), p.cols());
        for (std::size_t j = 0; j < p.cols(); ++j)
          for (std::size_t i = 0; i < p.rows(); ++i)
            shuffled.at(i, j) = p.at(i, column_perm[j]);
        return shuffled;
      }()) {}

ExtResult ext1_resolution(const FPModule& n) {
  Ext1Oracle oracle(n);
  return ExtResult{oracle.module(), ExtMethod::resolution, std::nullopt};
}

ModuleHom ext1_comparison(const Ext1Oracle& a, const Ext1Oracle& b) {
  const RingPtr& ring = a.source_module().ring();
  // Chain map over the identity of N: express each column of b's first
  // differential over a's columns.
  Submodule a_cols(ring, a.first_differential().rows(),
                   a.first_differential().columns());
  PolyMatrix phi1(ring, a.first_differential().cols(),
                  b.first_differential().cols());
  for (std::size_t j = 0; j < b.first_differential().cols(); ++j) {
    auto lift = a_cols.gb().express(b.first_differential().column(j));
    if (!lift)
      throw std::invalid_argument("presentations generate different modules");
    for (std::size_t i = 0; i < phi1.rows(); ++i) phi1.at(i, j) = (*lift)[i];
  }
  PolyMatrix phi1t = phi1.transpose();
  PolyMatrix cols(ring, b.module().cover_rank(), a.module().cover_rank());
  for (std::size_t k = 0; k < a.presentation().ambient_gens().size(); ++k) {
    Vec w = phi1t.apply(a.presentation().ambient_gens()[k]);
    auto coords = b.presentation().express(w);
    if (!coords) throw std::logic_error("comparison cocycle not expressible");
    for (std::size_t i = 0; i < cols.rows(); ++i) cols.at(i, k) = (*coords)[i];
  }
  ModuleHom cmp(a.module(), b.module(), std::move(cols));
  if (!cmp.is_isomorphism())
    throw std::logic_error("resolution comparison failed to be bijective");
  return cmp;
}

ModuleHom connecting_hom(const HomModule& homs, const Polynomial& f,
                         const Ext1Oracle& ext) {
  if (f.is_zero()) throw std::invalid_argument("scalar must be nonzero");
  const RingPtr& ring = f.ring();
  const PolyMatrix& m1 = ext.first_differential();
  const std::size_t gens = homs.gen_count();
  PolyMatrix cols(ring, ext.module().cover_rank(), gens);
  for (std::size_t j = 0; j < gens; ++j) {
    PolyMatrix phi = homs.materialize_generator(j).matrix();  // 1 x r0
    PolyMatrix restricted = phi * m1;                         // 1 x c1
    std::vector<Polynomial> entries;
    entries.reserve(m1.cols());
    for (std::size_t k = 0; k < m1.cols(); ++k)
      entries.push_back(exact_quotient(restricted.at(0, k), f));
    auto coords = ext.presentation().express(Vec(ring, std::move(entries)));
    if (!coords)
      throw std::logic_error("connecting cocycle not expressible");
    for (std::size_t i = 0; i < cols.rows(); ++i) cols.at(i, j) = (*coords)[i];
  }
  return ModuleHom(homs.module(), ext.module(), std::move(cols));
}

ModuleHom connecting_hom(const FPModule& n, const Polynomial& f) {
  HomModule homs(n, FPModule::cyclic(n.ring(), f));
  Ext1Oracle ext(n);
  return connecting_hom(homs, f, ext);
}

DeltaPieces delta_pieces(const FPModule& n, const Polynomial& f,
                         const Ext1Oracle& ext) {
  if (f.is_zero()) throw std::invalid_argument("scalar must be nonzero");
  const RingPtr& ring = n.ring();
  HomModule hom(n, FPModule::cyclic(ring, f));
  ModuleHom delta = connecting_hom(hom, f, ext);

  HomModule duals(n, FPModule::free_module(ring, 1));
  PolyMatrix red_cols(ring, hom.module().cover_rank(), duals.gen_count());
  for (std::size_t j = 0; j < duals.gen_count(); ++j) {
    PolyMatrix functional = duals.materialize_generator(j).matrix();
    auto coords = hom.express(functional);
    if (!coords) throw std::logic_error("reduction image not expressible");
    for (std::size_t i = 0; i < red_cols.rows(); ++i)
      red_cols.at(i, j) = (*coords)[i];
  }
  ModuleHom reduction(duals.module(), hom.module(), std::move(red_cols));
  FPModule quotient = cokernel(reduction).module;

  SubmodulePart torsion = scalar_torsion(ext.module(), f);
  PolyMatrix induced_cols(ring, torsion.pres.module().cover_rank(),
                          quotient.cover_rank());
  for (std::size_t j = 0; j < quotient.cover_rank(); ++j) {
    auto coords = torsion.pres.express(delta.matrix().column(j));
    if (!coords)
      throw std::logic_error("connecting image leaves the torsion part");
    for (std::size_t i = 0; i < induced_cols.rows(); ++i)
      induced_cols.at(i, j) = (*coords)[i];
  }
  ModuleHom induced(quotient, torsion.pres.module(), std::move(induced_cols));

  return DeltaPieces{std::move(hom),      std::move(delta),
                     std::move(reduction), std::move(quotient),
                     std::move(torsion),  std::move(induced)};
}

ExtResult ext1_scalar_torsion(const FPModule& n, const Polynomial& f) {
  Ext1Oracle ext(n);
  DeltaPieces pieces = delta_pieces(n, f, ext);
  if (!pieces.induced.is_isomorphism())
    throw std::logic_error("torsion shortcut disagrees with the oracle");
  return ExtResult{pieces.quotient, ExtMethod::scalar_shortcut,
                   pieces.induced};
}

GcdExt ext1_via_gcd(const FPModule& n) {
  if (!is_torsion_module(n))
    throw std::invalid_argument("module is not torsion");
  Polynomial a = gcd_of_ideal(annihilator(n));
  HomModule hom(n, FPModule::cyclic(n.ring(), a));
  Ext1Oracle ext(n);
  ModuleHom witness = connecting_hom(hom, a, ext);
  if (!witness.is_isomorphism())
    throw std::logic_error("gcd shortcut disagrees with the oracle");
  return GcdExt{std::move(a), hom.module(), std::move(witness)};
}

ModuleHom hom_scale_inclusion(const FPModule& n, const Polynomial& f,
                              const Polynomial& g) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("scalars must be nonzero");
  const RingPtr& ring = n.ring();
  HomModule from(n, FPModule::cyclic(ring, f));
  HomModule to(n, FPModule::cyclic(ring, f * g));
  PolyMatrix cols(ring, to.module().cover_rank(), from.gen_count());
  for (std::size_t j = 0; j < from.gen_count(); ++j) {
    PolyMatrix scaled = from.materialize_generator(j).matrix().scaled(g);
    auto coords = to.express(scaled);
    if (!coords) throw std::logic_error("scaled hom not expressible");
    for (std::size_t i = 0; i < cols.rows(); ++i) cols.at(i, j) = (*coords)[i];
  }
  ModuleHom mu(from.module(), to.module(), std::move(cols));
  if (!mu.is_injective())
    throw std::logic_error("postcomposition scaling failed to be injective");
  return mu;
}

ModuleHom quotient_scale_inclusion(const DeltaPieces& from,
                                   const DeltaPieces& to,
                                   const Polynomial& g) {
  const RingPtr& ring = g.ring();
  PolyMatrix cols(ring, to.quotient.cover_rank(), from.quotient.cover_rank());
  for (std::size_t j = 0; j < from.hom.gen_count(); ++j) {
    PolyMatrix scaled = from.hom.materialize_generator(j).matrix().scaled(g);
    auto coords = to.hom.express(scaled);
    if (!coords) throw std::logic_error("scaled hom not expressible");
    for (std::size_t i = 0; i < cols.rows(); ++i) cols.at(i, j) = (*coords)[i];
  }
  ModuleHom eta(from.quotient, to.quotient, std::move(cols));
  if (!eta.is_injective())
    throw std::logic_error("quotient scaling failed to be injective");
  return eta;
}

ModuleHom torsion_part_inclusion(const SubmodulePart& from,
                                 const SubmodulePart& to) {
  const RingPtr& ring = from.inclusion.target().ring();
  PolyMatrix cols(ring, to.pres.module().cover_rank(),
                  from.pres.module().cover_rank());
  const auto& gens = from.pres.ambient_gens();
  for (std::size_t j = 0; j < gens.size(); ++j) {
    auto coords = to.pres.express(gens[j]);
    if (!coords)
      throw std::logic_error("torsion part containment failed");
    for (std::size_t i = 0; i < cols.rows(); ++i) cols.at(i, j) = (*coords)[i];
  }
  return ModuleHom(from.pres.module(), to.pres.module(), std::move(cols));
}

GcdFactorizationReport verify_hom_gcd_factorization(const FPModule& n,
                                                    const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("scalar must be nonzero");
  if (!is_torsion_module(n))
    throw std::invalid_argument("module is not torsion");
  const RingPtr& ring = n.ring();
  Polynomial a = gcd_of_ideal(annihilator(n));
  Polynomial common = gcd_poly(a, f);
  Polynomial g = exact_quotient(f, common).monic();

  HomModule target(n, FPModule::cyclic(ring, f));
  HomModule source(n, FPModule::cyclic(ring, common));
  PolyMatrix cols(ring, target.module().cover_rank(), source.gen_count());
  for (std::size_t j = 0; j < source.gen_count(); ++j) {
    PolyMatrix scaled = source.materialize_generator(j).matrix().scaled(g);
    auto coords = target.express(scaled);
    if (!coords) throw std::logic_error("scaled hom not expressible");
    for (std::size_t i = 0; i < cols.rows(); ++i) cols.at(i, j) = (*coords)[i];
  }
  ModuleHom mu(source.module(), target.module(), std::move(cols));
  Submodule everything =
      Submodule::full(ring, target.module().cover_rank());
  bool equal = image(mu).equals(everything);
  return GcdFactorizationReport{std::move(a), std::move(common),
                                target.gen_count(), source.gen_count(),
                                equal};
}

StabilizationWitness ext1_stabilizer(const FPModule& n) {
  Ext1Oracle ext(n);
  Ideal ann = annihilator(ext.module());
  if (ann.is_zero())
    throw std::logic_error("Ext^1 of a finitely presented module must have "
                           "nonzero annihilator");
  Polynomial stabilizer(n.ring());
  Polynomial g = gcd_of_ideal(ann);
  if (!g.is_one() && ann.contains(g)) {
    stabilizer = g;
  } else {
    // The gcd need not lie in the ideal; the product of the reduced basis
    // always does.
    stabilizer = Polynomial::one(n.ring());
    for (const Polynomial& b : ann.basis()) stabilizer = stabilizer * b;
  }
  if (stabilizer.is_zero()) throw std::logic_error("zero stabilizer");
  if (!ann.contains(stabilizer))
    throw std::logic_error("stabilizer does not annihilate Ext^1");
  SubmodulePart tors = scalar_torsion(ext.module(), stabilizer);
  Submodule everything =
      Submodule::full(n.ring(), ext.module().cover_rank());
  if (!tors.sub.equals(everything))
    throw std::logic_error("stabilizer torsion part is not everything");
  return StabilizationWitness{std::move(stabilizer), ext.module()};
}

AdjunctionReport verify_quotient_adjunction(const FPModule& n,
                                            const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("scalar must be nonzero");
  const RingPtr& ring = n.ring();
  FPModule quotient = quotient_by_scalar(n, f).module;
  FPModule line = FPModule::cyclic(ring, f);
  HomModule lhs(quotient, line);
  HomModule rhs(n, line);
  PolyMatrix cols(ring, rhs.module().cover_rank(), lhs.gen_count());
  for (std::size_t j = 0; j < lhs.gen_count(); ++j) {
    // Precompose with the projection N -> N/fN, the identity on covers.
    PolyMatrix matrix = lhs.materialize_generator(j).matrix();
    auto coords = rhs.express(matrix);
    if (!coords) throw std::logic_error("restricted hom not expressible");
    for (std::size_t i = 0; i < cols.rows(); ++i) cols.at(i, j) = (*coords)[i];
  }
  ModuleHom restriction(lhs.module(), rhs.module(), std::move(cols));
  return AdjunctionReport{restriction.is_isomorphism(), lhs.gen_count(),
                          rhs.gen_count()};
}

}  // namespace extors
