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

#include "extors/fp_module.hpp"

namespace extors {

FPModule::FPModule(PolyMatrix presentation)
    : pres_(std::move(presentation)),
      rels_(pres_.ring(), pres_.rows(), pres_.columns()) {}

FPModule FPModule::free_module(RingPtr ring, std::size_t rank) {
  return FPModule(PolyMatrix(std::move(ring), rank, 0));
}

FPModule FPModule::cyclic(RingPtr ring, const Polynomial& f) {
  PolyMatrix m(ring, 1, 1);
  m.at(0, 0) = f;
  return FPModule(std::move(m));
}

FPModule FPModule::direct_sum(const FPModule& a, const FPModule& b) {
  require_same_ring(*a.ring(), *b.ring());
  const auto& p = a.pres_;
  const auto& q = b.pres_;
  PolyMatrix m(a.ring(), p.rows() + q.rows(), p.cols() + q.cols());
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) m.at(i, j) = p.at(i, j);
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      m.at(p.rows() + i, p.cols() + j) = q.at(i, j);
  return FPModule(std::move(m));
}

bool FPModule::is_zero() const {
  for (std::size_t i = 0; i < cover_rank(); ++i)
    if (!rels_.contains(Vec::unit(ring(), cover_rank(), i))) return false;
  return true;
}

bool FPModule::elements_equal(const Vec& a, const Vec& b) const {
  return rels_.contains(a - b);
}

ModuleHom::ModuleHom(FPModule source, FPModule target, PolyMatrix matrix)
    : source_(std::move(source)),
      target_(std::move(target)),
      matrix_(std::move(matrix)) {
  require_same_ring(*source_.ring(), *target_.ring());
  if (matrix_.rows() != target_.cover_rank() ||
      matrix_.cols() != source_.cover_rank())
    throw std::invalid_argument("hom matrix shape mismatch");
  // Well-definedness certificate.
  for (std::size_t j = 0; j < source_.presentation().cols(); ++j) {
    Vec image = matrix_.apply(source_.presentation().column(j));
    if (!target_.relations().contains(image))
      throw std::logic_error("module hom does not preserve relations");
  }
}

ModuleHom ModuleHom::identity(const FPModule& m) {
  return ModuleHom(m, m, PolyMatrix::identity(m.ring(), m.cover_rank()));
}

ModuleHom ModuleHom::zero(const FPModule& source, const FPModule& target) {
  return ModuleHom(source, target,
                   PolyMatrix(source.ring(), target.cover_rank(),
                              source.cover_rank()));
}

bool ModuleHom::equals(const ModuleHom& other) const {
  if (matrix_.rows() != other.matrix_.rows() ||
      matrix_.cols() != other.matrix_.cols())
    return false;
  for (std::size_t j = 0; j < matrix_.cols(); ++j)
    if (!target_.relations().contains(matrix_.column(j) -
                                      other.matrix_.column(j)))
      return false;
  return true;
}

bool ModuleHom::is_injective() const {
  return source_.relations().contains(kernel(*this));
}

bool ModuleHom::is_surjective() const {
  Submodule im = image(*this);
  for (std::size_t i = 0; i < target_.cover_rank(); ++i)
    if (!im.contains(Vec::unit(target_.ring(), target_.cover_rank(), i)))
      return false;
  return true;
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
  return ModuleHom(f.source(), g.target(), g.matrix() * f.matrix());
}

Submodule kernel(const ModuleHom& h) {
  // {v : H v lies in the target relations} = projections of the syzygies of
  // [H | target relations] onto the first block.
  PolyMatrix combined =
      PolyMatrix::hcat(h.matrix(), h.target().presentation());
  PolyMatrix syz = syzygies(combined);
  std::vector<Vec> gens;
  const std::size_t s = h.source().cover_rank();
  for (std::size_t j = 0; j < syz.cols(); ++j) {
    std::vector<Polynomial> entries;
    entries.reserve(s);
    for (std::size_t i = 0; i < s; ++i) entries.push_back(syz.at(i, j));
    Vec v(h.source().ring(), std::move(entries));
    if (!v.is_zero()) gens.push_back(std::move(v));
  }
  return Submodule(h.source().ring(), s, std::move(gens));
}

Submodule image(const ModuleHom& h) {
  std::vector<Vec> gens = h.matrix().columns();
  for (const Vec& r : h.target().presentation().columns()) gens.push_back(r);
  return Submodule(h.target().ring(), h.target().cover_rank(),
                   std::move(gens));
}

CokernelResult cokernel(const ModuleHom& h) {
  PolyMatrix pres =
      PolyMatrix::hcat(h.matrix(), h.target().presentation());
  FPModule coker(std::move(pres));
  ModuleHom proj(h.target(), coker,
                 PolyMatrix::identity(h.target().ring(),
                                      h.target().cover_rank()));
  return CokernelResult{std::move(coker), std::move(proj)};
}

PolyMatrix subquotient_presentation(RingPtr ring, std::size_t ambient,
                                    const std::vector<Vec>& gens,
                                    const std::vector<Vec>& rels) {
  std::vector<Vec> all = gens;
  all.insert(all.end(), rels.begin(), rels.end());
  PolyMatrix combined = PolyMatrix::from_columns(ring, ambient, all);
  PolyMatrix syz = syzygies(combined);
  PolyMatrix out(ring, gens.size(), syz.cols());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < syz.cols(); ++j) out.at(i, j) = syz.at(i, j);
  return out;
}

Subquotient::Subquotient(RingPtr ring, std::size_t ambient_rank,
                         std::vector<Vec> gens, std::vector<Vec> rels)
    : ring_(ring),
      ambient_(ambient_rank),
      gens_(std::move(gens)),
      rels_(std::move(rels)),
      combined_(ring, ambient_rank,
                [&] {
                  std::vector<Vec> all = gens_;
                  all.insert(all.end(), rels_.begin(), rels_.end());
                  return all;
                }()),
      module_(subquotient_presentation(ring, ambient_rank, gens_, rels_)) {
  Submodule span(ring_, ambient_, gens_);
  for (const Vec& r : rels_)
    if (!span.contains(r))
      throw std::logic_error("subquotient relations leave the span");
}

Vec Subquotient::to_ambient(const Vec& coords) const {
  if (coords.rank() != gens_.size())
    throw std::invalid_argument("coordinate rank mismatch");
  Vec out(ring_, ambient_);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (coords[i].is_zero()) continue;
    out = out + gens_[i].scaled(coords[i]);
  }
  return out;
}

std::optional<Vec> Subquotient::express(const Vec& ambient) const {
  auto lift = combined_.gb().express(ambient);
  if (!lift) return std::nullopt;
  // Coefficients on the relation block map to zero in the subquotient.
  std::vector<Polynomial> coords(lift->begin(),
                                 lift->begin() + gens_.size());
  return Vec(ring_, std::move(coords));
}

Submodule Subquotient::as_submodule() const {
  std::vector<Vec> all = gens_;
  all.insert(all.end(), rels_.begin(), rels_.end());
  return Submodule(ring_, ambient_, std::move(all));
}

}  // namespace extors
