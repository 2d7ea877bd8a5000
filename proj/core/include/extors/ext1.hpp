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

#include "extors/module_ops.hpp"

namespace extors {

/// Ext^1(N, A) from a length-2 free resolution F2 -> F1 -> F0 of N:
/// the subquotient ker(Hom(F1,A) -> Hom(F2,A)) / im(Hom(F0,A) -> Hom(F1,A))
/// of A^{c1}, with coordinates available for cocycles.
class Ext1Oracle {
 public:
  explicit Ext1Oracle(const FPModule& n);
  /// Same module with the presentation columns permuted, for
  /// resolution-independence checks.
  Ext1Oracle(const FPModule& n, const std::vector<std::size_t>& column_perm);

  const FPModule& source_module() const { return n_; }
  const FPModule& module() const { return sub_.module(); }
  const Subquotient& presentation() const { return sub_; }
  const PolyMatrix& first_differential() const { return m1_; }
  const PolyMatrix& second_differential() const { return m2_; }

 private:
  Ext1Oracle(const FPModule& n, PolyMatrix m1);

  FPModule n_;
  PolyMatrix m1_, m2_;
  Subquotient sub_;
};

enum class ExtMethod { resolution, scalar_shortcut, gcd_shortcut };

struct ExtResult {
  FPModule module;
  ExtMethod method;
  std::optional<ModuleHom> witness;
};

ExtResult ext1_resolution(const FPModule& n);

/// Canonical comparison between two resolution-based presentations of
/// Ext^1 of the same module, certified bijective.
ModuleHom ext1_comparison(const Ext1Oracle& a, const Ext1Oracle& b);

/// Connecting homomorphism Hom(N, A/fA) -> Ext^1(N, A) of the sequence
/// 0 -> A -f-> A -> A/fA -> 0: lift a hom to the free cover, restrict to the
/// relations, divide by f.
ModuleHom connecting_hom(const HomModule& homs, const Polynomial& f,
                         const Ext1Oracle& ext);
ModuleHom connecting_hom(const FPModule& n, const Polynomial& f);

/// Everything the exactness statements around the connecting homomorphism
/// mention, for one (N, f).
struct DeltaPieces {
  HomModule hom;          // Hom(N, A/fA)
  ModuleHom delta;        // Hom(N, A/fA) -> Ext^1(N, A)
  ModuleHom reduction;    // Hom(N, A) -> Hom(N, A/fA)
  FPModule quotient;      // Hom(N, A/fA) / image(reduction)
  SubmodulePart torsion;  // ker(f) on Ext^1(N, A)
  ModuleHom induced;      // quotient -> torsion presentation (bijective)
};
DeltaPieces delta_pieces(const FPModule& n, const Polynomial& f,
                         const Ext1Oracle& ext);

/// ker(f) on Ext^1(N,A) computed as Hom(N,A/fA)/(Hom(N,A)/fHom(N,A)),
/// certified against the resolution oracle through the connecting
/// homomorphism. Throws std::logic_error when the certificate fails.
ExtResult ext1_scalar_torsion(const FPModule& n, const Polynomial& f);

/// For torsion N: a = gcd of Ann(N) and the certified identification
/// Hom(N, A/aA) == Ext^1(N, A).
struct GcdExt {
  Polynomial gcd;
  FPModule module;    // Hom(N, A/aA)
  ModuleHom witness;  // onto the resolution oracle, bijective
};
GcdExt ext1_via_gcd(const FPModule& n);

/// Postcomposition with A/fA -> A/fgA (multiplication by g):
/// Hom(N, A/fA) -> Hom(N, A/fgA), injective.
ModuleHom hom_scale_inclusion(const FPModule& n, const Polynomial& f,
                              const Polynomial& g);

/// The induced injection between the quotients by the reduction images,
/// built on prepared pieces for f and f*g.
ModuleHom quotient_scale_inclusion(const DeltaPieces& from,
                                   const DeltaPieces& to, const Polynomial& g);

/// Inclusion of one torsion part into a larger one, in coordinates.
ModuleHom torsion_part_inclusion(const SubmodulePart& from,
                                 const SubmodulePart& to);

/// For torsion N with a = gcd(Ann N) and any nonzero f: Hom(N, A/fA) equals
/// the image of Hom(N, A/gcd(a,f)A) under postcomposition scaling.
struct GcdFactorizationReport {
  Polynomial ann_gcd;        // a
  Polynomial common;         // gcd(a, f)
  std::size_t hom_gens;      // generator count of Hom(N, A/fA)
  std::size_t image_gens;    // generator count of the factored side
  bool equal;
};
GcdFactorizationReport verify_hom_gcd_factorization(const FPModule& n,
                                                    const Polynomial& f);

/// Nonzero stabilizer of Ext^1(N,A): an annihilating scalar whose torsion
/// part is everything. Throws std::logic_error if Ann(Ext^1) = 0.
struct StabilizationWitness {
  Polynomial stabilizer;
  FPModule ext;  // resolution-based Ext^1(N, A)
};
StabilizationWitness ext1_stabilizer(const FPModule& n);

/// Restriction of scalars: Hom_{A/fA}(N/fN, A/fA) == Hom_A(N, A/fA), as the
/// certified bijectivity of the precomposition-with-projection map.
struct AdjunctionReport {
  bool bijective;
  std::size_t lhs_gens, rhs_gens;
};
AdjunctionReport verify_quotient_adjunction(const FPModule& n,
                                            const Polynomial& f);

}  // namespace extors
