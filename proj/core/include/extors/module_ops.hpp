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

#include "extors/fp_module.hpp"
#include "extors/ideal.hpp"

namespace extors {

/// Presentation chain for coker(m1): ... -> A^{c2} -m2-> A^{c1} -m1-> A^{r}.
/// matrices[k] is the (k+1)-st differential; consecutive products vanish and
/// each kernel equals the image of the next matrix by construction.
std::vector<PolyMatrix> free_resolution(const FPModule& n, std::size_t length);

/// Hom_A(source, target) presented as a finitely presented module:
/// the kernel of Hom(F0, target) -> Hom(F1, target). Elements materialize
/// as certified homomorphisms and certified homomorphisms have coordinates.
class HomModule {
 public:
  HomModule(FPModule source, FPModule target);

  const FPModule& source() const { return source_; }
  const FPModule& target() const { return target_; }
  const FPModule& module() const { return sub_.module(); }
  std::size_t gen_count() const { return sub_.ambient_gens().size(); }

  /// The hom with the given coordinates in the presentation.
  ModuleHom materialize(const Vec& coords) const;
  ModuleHom materialize_generator(std::size_t index) const;

  /// Coordinates of a hom given by its matrix on free covers; nullopt when
  /// the matrix does not define an element (it must map relations into
  /// relations).
  std::optional<Vec> express(const PolyMatrix& hom_matrix) const;
  std::optional<Vec> express(const ModuleHom& hom) const;

  const Subquotient& presentation() const { return sub_; }

 private:
  PolyMatrix reshape(const Vec& flat) const;
  Vec flatten(const PolyMatrix& m) const;

  FPModule source_, target_;
  Subquotient sub_;  // ambient A^{target_cover * source_cover}, vec(matrix)
};

/// Annihilator ideal {a : a*N = 0}, via one ideal quotient per generator.
Ideal annihilator(const FPModule& n);

/// A submodule of n's free cover presented as a module of its own, with the
/// inclusion into n.
struct SubmodulePart {
  Submodule sub;        // of the free cover, relations included
  Subquotient pres;     // presentation of sub / relations
  ModuleHom inclusion;  // pres.module() -> n
};

/// ker(f * id_N) with its inclusion; f must be nonzero.
SubmodulePart scalar_torsion(const FPModule& n, const Polynomial& f);

/// Torsion submodule Tors(N) = ker(N -> N**) (biduality kernel; equals the
/// torsion over a domain).
SubmodulePart torsion_submodule(const FPModule& n);

bool is_torsion_module(const FPModule& n);
bool is_torsion_free(const FPModule& n);

struct QuotientByScalar {
  FPModule module;  // N/fN
  ModuleHom projection;
};
QuotientByScalar quotient_by_scalar(const FPModule& n, const Polynomial& f);

/// Embedding of a torsion-free module into a free module F with a nonzero
/// scalar multiplying F into the image: pick a fraction-field basis among
/// the generators and clear denominators.
struct FreeEmbedding {
  FPModule free;          // A^k
  ModuleHom embedding;    // n -> free, injective
  Polynomial denominator; // nonzero, denominator * F inside the image
};
FreeEmbedding embed_in_free(const FPModule& n);

}  // namespace extors
