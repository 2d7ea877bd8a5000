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

#include "extors/matrix.hpp"

namespace extors {

/// Finitely presented module coker(presentation : A^cols -> A^rows). The
/// rows index the free cover whose unit vectors are the module generators.
/// Module identity is never decided abstractly; comparisons go through
/// explicit certified homomorphisms.
class FPModule {
 public:
  explicit FPModule(PolyMatrix presentation);

  static FPModule free_module(RingPtr ring, std::size_t rank);
  static FPModule cyclic(RingPtr ring, const Polynomial& f);  // A/(f)
  static FPModule direct_sum(const FPModule& a, const FPModule& b);

  const RingPtr& ring() const { return pres_.ring(); }
  std::size_t cover_rank() const { return pres_.rows(); }
  const PolyMatrix& presentation() const { return pres_; }

  /// Relation submodule of the free cover (shared lazy GB).
  const Submodule& relations() const { return rels_; }

  bool is_zero() const;
  bool elements_equal(const Vec& a, const Vec& b) const;
  Vec reduce(const Vec& v) const { return rels_.reduce(v); }

 private:
  PolyMatrix pres_;
  Submodule rels_;
};

/// Homomorphism between finitely presented modules, given by a matrix on
/// free covers. Construction verifies the well-definedness certificate:
/// every source relation maps into the target relations.
class ModuleHom {
 public:
  ModuleHom(FPModule source, FPModule target, PolyMatrix matrix);

  static ModuleHom identity(const FPModule& m);
  static ModuleHom zero(const FPModule& source, const FPModule& target);

  const FPModule& source() const { return source_; }
  const FPModule& target() const { return target_; }
  const PolyMatrix& matrix() const { return matrix_; }

  Vec apply_on_cover(const Vec& v) const { return matrix_.apply(v); }

  /// Equality as maps: the images of the source generators agree in the
  /// target module.
  bool equals(const ModuleHom& other) const;

  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }

 private:
  FPModule source_, target_;
  PolyMatrix matrix_;
};

/// g after f.
ModuleHom compose(const ModuleHom& g, const ModuleHom& f);

/// Kernel of h as a submodule of the source free cover; it contains the
/// source relations.
Submodule kernel(const ModuleHom& h);

/// Image of h as a submodule of the target free cover, relations included.
Submodule image(const ModuleHom& h);

struct CokernelResult {
  FPModule module;
  ModuleHom projection;
};
CokernelResult cokernel(const ModuleHom& h);

/// Presentation of span(gens)/span(rels) inside A^ambient, with both
/// directions of the dictionary: coordinates -> ambient and (for members)
/// ambient -> coordinates. Requires span(rels) contained in span(gens).
class Subquotient {
 public:
  Subquotient(RingPtr ring, std::size_t ambient_rank, std::vector<Vec> gens,
              std::vector<Vec> rels);

  const RingPtr& ring() const { return ring_; }
  std::size_t ambient_rank() const { return ambient_; }
  const std::vector<Vec>& ambient_gens() const { return gens_; }
  const std::vector<Vec>& ambient_rels() const { return rels_; }
  const FPModule& module() const { return module_; }

  Vec to_ambient(const Vec& coords) const;
  /// Coordinates of an ambient member of span(gens + rels); nullopt outside.
  std::optional<Vec> express(const Vec& ambient) const;

  /// The subquotient's class in the ambient as a submodule (gens + rels).
  Submodule as_submodule() const;

 private:
  RingPtr ring_;
  std::size_t ambient_;
  std::vector<Vec> gens_;
  std::vector<Vec> rels_;
  Submodule combined_;  // gens followed by rels; lifts give express()
  FPModule module_;
};

/// Columns of the presentation of span(gens)/span(rels): projections of the
/// syzygies of [gens | rels] onto the gens block.
PolyMatrix subquotient_presentation(RingPtr ring, std::size_t ambient,
                                    const std::vector<Vec>& gens,
                                    const std::vector<Vec>& rels);

}  // namespace extors
