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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "extors/corpus.hpp"
#include "extors/module_ops.hpp"
#include "extors/text_io.hpp"

using namespace extors;

namespace {

RingPtr ring_xy() { return parse_ring("ring QQ[x,y] order grevlex"); }

Polynomial p(const RingPtr& r, const std::string& s) {
  return parse_polynomial(r, s);
}

Vec vec(const RingPtr& r, std::initializer_list<const char*> entries) {
  std::vector<Polynomial> v;
  for (const char* e : entries) v.push_back(p(r, e));
  return Vec(r, std::move(v));
}

}  // namespace

TEST_CASE("annihilators") {
  RingPtr r = ring_xy();
  CHECK(annihilator(FPModule::cyclic(r, p(r, "x^2")))
            .same_ideal_as(Ideal(r, {p(r, "x^2")})));
  FPModule sum = FPModule::direct_sum(FPModule::cyclic(r, p(r, "x")),
                                      FPModule::cyclic(r, p(r, "y")));
  CHECK(annihilator(sum).same_ideal_as(Ideal(r, {p(r, "x*y")})));
  CHECK(annihilator(FPModule::free_module(r, 1)).is_zero());

  SUBCASE("generators kill and random probes do not") {
    Rng rng(53);
    FPModule n = corpus_module(r, 99, CorpusProfile::torsion, 0);
    Ideal ann = annihilator(n);
    REQUIRE_FALSE(ann.is_zero());
    for (const Polynomial& a : ann.basis())
      for (std::size_t i = 0; i < n.cover_rank(); ++i)
        CHECK(n.relations().contains(
            Vec::unit(r, n.cover_rank(), i).scaled(a)));
    // 16 seeded probes: anything outside the annihilator moves some
    // generator.
    for (int t = 0; t < 16; ++t) {
      Polynomial f = random_polynomial(rng, r, 2, 3, true);
      if (ann.contains(f)) continue;
      bool moves = false;
      for (std::size_t i = 0; i < n.cover_rank() && !moves; ++i)
        if (!n.relations().contains(Vec::unit(r, n.cover_rank(), i).scaled(f)))
          moves = true;
      CHECK(moves);
    }
  }
}

TEST_CASE("scalar torsion") {
  RingPtr r = ring_xy();
  FPModule ax2 = FPModule::cyclic(r, p(r, "x^2"));

  SUBCASE("kernel of x on A/(x^2) is cyclic of order x") {
    SubmodulePart part = scalar_torsion(ax2, p(r, "x"));
    CHECK(part.sub.equals(Submodule(r, 1, {vec(r, {"x"})})));
    // The presented module is isomorphic to A/(x) by an explicit witness.
    FPModule ax = FPModule::cyclic(r, p(r, "x"));
    auto coords = part.pres.express(vec(r, {"x"}));
    REQUIRE(coords.has_value());
    PolyMatrix cols(r, part.pres.module().cover_rank(), 1);
    for (std::size_t i = 0; i < cols.rows(); ++i) cols.at(i, 0) = (*coords)[i];
    ModuleHom witness(ax, part.pres.module(), cols);
    CHECK(witness.is_isomorphism());
    // The inclusion back into N is certified and injective.
    CHECK(part.inclusion.is_injective());
  }
  SUBCASE("a regular scalar has no torsion") {
    SubmodulePart part = scalar_torsion(ax2, p(r, "y"));
    CHECK(part.sub.equals(ax2.relations()));
  }
  SUBCASE("units never have torsion") {
    SubmodulePart part = scalar_torsion(ax2, p(r, "1"));
    CHECK(part.sub.equals(ax2.relations()));
  }
  SUBCASE("zero scalar is rejected") {
    CHECK_THROWS_AS(scalar_torsion(ax2, Polynomial::zero(r)),
                    std::invalid_argument);
  }
  SUBCASE("divisibility gives containment") {
    Rng rng(59);
    for (int t = 0; t < 8; ++t) {
      FPModule n = corpus_module(r, 7, CorpusProfile::mixed, t);
      Polynomial f = random_nonunit(rng, r, 2);
      Polynomial g = random_nonunit(rng, r, 1);
      SubmodulePart small = scalar_torsion(n, f);
      SubmodulePart large = scalar_torsion(n, f * g);
      CHECK(large.sub.contains(small.sub));
    }
  }
}

TEST_CASE("torsion submodule") {
  RingPtr r = ring_xy();

  SUBCASE("split torsion plus free") {
    FPModule n = FPModule::direct_sum(FPModule::cyclic(r, p(r, "x")),
                                      FPModule::free_module(r, 1));
    SubmodulePart tors = torsion_submodule(n);
    CHECK(tors.sub.equals(Submodule(r, 2, {vec(r, {"1", "0"})})));
  }
  SUBCASE("free modules are torsion free") {
    FPModule n = FPModule::free_module(r, 2);
    CHECK(is_torsion_free(n));
    CHECK_FALSE(is_torsion_module(n));
  }
  SUBCASE("rank-zero module is all torsion") {
    PolyMatrix m(r, 1, 2);
    m.at(0, 0) = p(r, "x");
    m.at(0, 1) = p(r, "y");
    FPModule n(m);
    SubmodulePart tors = torsion_submodule(n);
    CHECK(tors.sub.equals(Submodule::full(r, 1)));
    CHECK(is_torsion_module(n));
  }
  SUBCASE("purity and idempotence on corpus modules") {
    for (int t = 0; t < 6; ++t) {
      FPModule n = corpus_module(r, 13, CorpusProfile::mixed, t);
      SubmodulePart tors = torsion_submodule(n);
      // Tors(Tors N) = Tors N.
      FPModule t_mod = tors.pres.module();
      SubmodulePart tors2 = torsion_submodule(t_mod);
      CHECK(tors2.sub.equals(Submodule::full(r, t_mod.cover_rank())));
      // Tors(N / Tors N) = 0.
      PolyMatrix quot_pres = PolyMatrix::from_columns(
          r, n.cover_rank(), tors.sub.generators());
      FPModule quotient(
          PolyMatrix::hcat(quot_pres, n.presentation()));
      CHECK(is_torsion_free(quotient));
      // Hom into the ring vanishes on the torsion part.
      HomModule into_ring(t_mod, FPModule::free_module(r, 1));
      CHECK(into_ring.module().is_zero());
    }
  }
}

TEST_CASE("quotient by a scalar") {
  RingPtr r = ring_xy();
  QuotientByScalar q = quotient_by_scalar(FPModule::free_module(r, 1),
                                          p(r, "x"));
  // A/(x): same relations either way.
  CHECK(q.module.relations().equals(FPModule::cyclic(r, p(r, "x")).relations()));

  FPModule ax = FPModule::cyclic(r, p(r, "x"));
  QuotientByScalar idem = quotient_by_scalar(ax, p(r, "x"));
  CHECK(idem.module.relations().equals(ax.relations()));

  QuotientByScalar two = quotient_by_scalar(FPModule::free_module(r, 2),
                                            p(r, "y"));
  Submodule expected(r, 2, {vec(r, {"y", "0"}), vec(r, {"0", "y"})});
  CHECK(two.module.relations().equals(expected));
  CHECK_THROWS_AS(quotient_by_scalar(ax, Polynomial::zero(r)),
                  std::invalid_argument);
}

TEST_CASE("embedding torsion-free modules into free modules") {
  RingPtr r = ring_xy();

  SUBCASE("the ideal (x, y) as a module") {
    PolyMatrix m(r, 2, 1);
    m.at(0, 0) = p(r, "y");
    m.at(1, 0) = p(r, "-x");
    FPModule n(m);  // generators x, y with the Koszul relation
    FreeEmbedding emb = embed_in_free(n);
    CHECK(emb.free.cover_rank() == 1);
    CHECK(emb.denominator == p(r, "x"));
    CHECK(emb.embedding.matrix().at(0, 0) == p(r, "x"));
    CHECK(emb.embedding.matrix().at(0, 1) == p(r, "y"));
    CHECK(emb.embedding.is_injective());
  }
  SUBCASE("free modules embed as themselves") {
    FreeEmbedding emb = embed_in_free(FPModule::free_module(r, 3));
    CHECK(emb.free.cover_rank() == 3);
    CHECK(emb.denominator.is_one());
    CHECK(emb.embedding.matrix() == PolyMatrix::identity(r, 3));
  }
  SUBCASE("the zero module embeds in rank zero") {
    FreeEmbedding emb = embed_in_free(FPModule::cyclic(r, p(r, "1")));
    CHECK(emb.free.cover_rank() == 0);
    CHECK(emb.denominator.is_one());
  }
  SUBCASE("torsion is rejected") {
    CHECK_THROWS_AS(embed_in_free(FPModule::cyclic(r, p(r, "x"))),
                    std::invalid_argument);
  }
  SUBCASE("denominator multiplies the free module into the image") {
    PolyMatrix m(r, 2, 1);
    m.at(0, 0) = p(r, "y^2");
    m.at(1, 0) = p(r, "-x*y+1");
    FPModule n(m);
    FreeEmbedding emb = embed_in_free(n);
    CHECK(emb.embedding.is_injective());
    CHECK_FALSE(emb.denominator.is_zero());
    Submodule im = image(emb.embedding);
    for (std::size_t i = 0; i < emb.free.cover_rank(); ++i)
      CHECK(im.contains(
          Vec::unit(r, emb.free.cover_rank(), i).scaled(emb.denominator)));
  }
}
