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

TEST_CASE("zero detection") {
  RingPtr r = ring_xy();
  CHECK(FPModule::cyclic(r, p(r, "1")).is_zero());
  CHECK_FALSE(FPModule::cyclic(r, p(r, "x")).is_zero());
  CHECK_FALSE(FPModule::free_module(r, 2).is_zero());
  CHECK(FPModule(PolyMatrix::identity(r, 2)).is_zero());
  CHECK(FPModule(PolyMatrix(r, 0, 0)).is_zero());
}

TEST_CASE("hom certificates") {
  RingPtr r = ring_xy();
  FPModule ax = FPModule::cyclic(r, p(r, "x"));
  FPModule ax2 = FPModule::cyclic(r, p(r, "x^2"));

  // A/(x^2) -> A/(x) by 1 is fine; the inverse direction by 1 is not.
  PolyMatrix one = PolyMatrix::identity(r, 1);
  CHECK_NOTHROW(ModuleHom(ax2, ax, one));
  CHECK_THROWS_AS(ModuleHom(ax, ax2, one), std::logic_error);
  // A/(x) -> A/(x^2) by x is well defined.
  PolyMatrix by_x = one.scaled(p(r, "x"));
  CHECK_NOTHROW(ModuleHom(ax, ax2, by_x));
}

TEST_CASE("kernel image cokernel") {
  RingPtr r = ring_xy();

  SUBCASE("zero map") {
    FPModule n = FPModule::cyclic(r, p(r, "x"));
    ModuleHom z = ModuleHom::zero(n, n);
    CHECK(kernel(z).contains(Vec::unit(r, 1, 0)));
    CHECK(image(z).equals(n.relations()));
    CHECK_FALSE(cokernel(z).module.is_zero());
  }
  SUBCASE("multiplication by x on A/(x^2)") {
    FPModule n = FPModule::cyclic(r, p(r, "x^2"));
    ModuleHom mult(n, n, PolyMatrix::identity(r, 1).scaled(p(r, "x")));
    Submodule expected(r, 1, {vec(r, {"x"})});
    CHECK(kernel(mult).equals(expected));
    CHECK(image(mult).equals(expected));
  }
  SUBCASE("identity") {
    FPModule n = FPModule::cyclic(r, p(r, "x*y-1"));
    ModuleHom id = ModuleHom::identity(n);
    CHECK(kernel(id).equals(n.relations()));
    CHECK(cokernel(id).module.is_zero());
    CHECK(id.is_isomorphism());
  }
}

TEST_CASE("free resolutions") {
  RingPtr r = ring_xy();

  SUBCASE("Koszul complex of (x, y)") {
    PolyMatrix m(r, 1, 2);
    m.at(0, 0) = p(r, "x");
    m.at(0, 1) = p(r, "y");
    FPModule n(m);
    auto res = free_resolution(n, 3);
    REQUIRE(res.size() == 3);
    CHECK(res[0].cols() == 2);
    CHECK(res[1].cols() == 1);  // ranks 1, 2, 1
    CHECK(res[2].cols() == 0);
  }
  SUBCASE("free module resolves trivially") {
    auto res = free_resolution(FPModule::free_module(r, 2), 2);
    CHECK(res[0].cols() == 0);
    CHECK(res[1].cols() == 0);
  }
  SUBCASE("cyclic torsion module") {
    auto res = free_resolution(FPModule::cyclic(r, p(r, "x")), 2);
    CHECK(res[0].cols() == 1);
    CHECK(res[1].cols() == 0);
  }
  SUBCASE("exactness both ways on a random presentation") {
    PolyMatrix m(r, 2, 3);
    m.at(0, 0) = p(r, "x");
    m.at(0, 1) = p(r, "y^2");
    m.at(1, 1) = p(r, "x-y");
    m.at(1, 2) = p(r, "x*y");
    auto res = free_resolution(FPModule(m), 3);
    for (std::size_t k = 0; k + 1 < res.size(); ++k) {
      CHECK((res[k] * res[k + 1]).is_zero());
      // Kernel of each differential equals the image of the next.
      Submodule ker(r, res[k].cols(), syzygies(res[k]).columns());
      Submodule im(r, res[k + 1].rows(), res[k + 1].columns());
      CHECK(ker.equals(im));
    }
  }
}

TEST_CASE("hom modules") {
  RingPtr r = ring_xy();
  FPModule line = FPModule::free_module(r, 1);
  FPModule ax = FPModule::cyclic(r, p(r, "x"));

  SUBCASE("torsion into free vanishes") {
    HomModule h(ax, line);
    CHECK(h.module().is_zero());
  }
  SUBCASE("cyclic endomorphisms") {
    HomModule h(ax, ax);
    CHECK_FALSE(h.module().is_zero());
    // Some generator materializes to the identity.
    bool found_identity = false;
    for (std::size_t i = 0; i < h.gen_count(); ++i) {
      ModuleHom hom = h.materialize_generator(i);
      if (hom.equals(ModuleHom::identity(ax)) ||
          hom.equals(ModuleHom(ax, ax,
                               PolyMatrix::identity(r, 1).scaled(
                                   p(r, "-1")))))
        found_identity = true;
    }
    CHECK(found_identity);
    // The endomorphism module of A/(x) is cyclic: certified iso from A/(x).
    auto coords = h.express(ModuleHom::identity(ax));
    REQUIRE(coords.has_value());
    PolyMatrix cols(r, h.module().cover_rank(), 1);
    for (std::size_t i = 0; i < cols.rows(); ++i)
      cols.at(i, 0) = (*coords)[i];
    ModuleHom witness(ax, h.module(), cols);
    CHECK(witness.is_isomorphism());
  }
  SUBCASE("free source gives a direct sum of copies") {
    FPModule n = FPModule::cyclic(r, p(r, "x^2+y"));
    FPModule a2 = FPModule::free_module(r, 2);
    HomModule h(a2, n);
    FPModule expected = FPModule::direct_sum(n, n);
    // The canonical map N + N -> Hom(A^2, N) sends (u, v) to the hom with
    // matrix [u v]: express the generators and certify bijectivity.
    PolyMatrix cols(r, h.module().cover_rank(), expected.cover_rank());
    for (std::size_t g = 0; g < expected.cover_rank(); ++g) {
      PolyMatrix hom_matrix(r, n.cover_rank(), 2);
      hom_matrix.at(0, g) = p(r, "1");
      auto coords = h.express(hom_matrix);
      REQUIRE(coords.has_value());
      for (std::size_t i = 0; i < cols.rows(); ++i)
        cols.at(i, g) = (*coords)[i];
    }
    ModuleHom witness(expected, h.module(), cols);
    CHECK(witness.is_isomorphism());
  }
  SUBCASE("materialized homs are certified") {
    FPModule n(PolyMatrix::identity(r, 1).scaled(p(r, "x*y")));
    HomModule h(n, FPModule::cyclic(r, p(r, "x")));
    for (std::size_t i = 0; i < h.gen_count(); ++i)
      CHECK_NOTHROW(h.materialize_generator(i));
  }
}
