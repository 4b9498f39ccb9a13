// Copyright 2026 The deglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <vector>

#include "deglab/finite_category.hpp"
#include "deglab/monoidal.hpp"
#include "deglab/suites.hpp"
#include "doctest.h"
#include "models.hpp"
#include "oracle.hpp"

using namespace deglab;

namespace {

std::vector<std::vector<Elem>> at_lists(const ValidationReport& r, const char* axiom) {
  std::vector<std::vector<Elem>> out;
  for (const auto& v : r.by_axiom(axiom)) out.push_back(v.at);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Finite categories

TEST_CASE("stock categories satisfy the category laws") {
  for (const FiniteCategory& c : {terminal_category(), discrete_category(3), indiscrete_category(3),
                                  arrow_category(), one_object_category({{0, 1}, {1, 0}}, 0)})
    CHECK(check_category(c).ok());
}

TEST_CASE("broken composition is reported") {
  FiniteCategory c = one_object_category({{0, 1}, {1, 1}}, 0);
  c.comp[1][1] = 0;
  CHECK(check_category(c).ok());  // Z/2 again
  c.comp[0][1] = 0;
  CHECK_FALSE(check_category(c).ok());
}

TEST_CASE("isomorphisms by search") {
  const FiniteCategory ind = indiscrete_category(2);
  CHECK(find_isomorphism(ind, 0, 1).has_value());
  CHECK_FALSE(find_isomorphism(arrow_category(), 0, 1).has_value());
  CHECK_FALSE(inverse_morphism(arrow_category(), 2).has_value());
}

TEST_CASE("functor enumeration") {
  CHECK(enumerate_functors(arrow_category(), arrow_category()).size() == 3);
  CHECK(enumerate_functors(discrete_category(2), indiscrete_category(2)).size() == 4);
  for (const auto& f : enumerate_functors(arrow_category(), indiscrete_category(2))) CHECK(check_functor(f).ok());
  const FinFunctor id = identity_functor(arrow_category());
  CHECK(compose_functors(id, id) == id);
}

TEST_CASE("natural transformations and their composites") {
  const FiniteCategory c = arrow_category();
  const FinFunctor id = identity_functor(c);
  const FinFunctor to_one{c, c, {1, 1}, {1, 1, 1}};
  REQUIRE(check_functor(to_one).ok());
  const FinNatTrans bang{id, to_one, {2, 1}};
  CHECK(check_nat_trans(bang).ok());
  CHECK(check_nat_trans(FinNatTrans{id, to_one, {0, 1}}).has("component_boundary"));
  const FinNatTrans comp = vcompose(identity_nat_trans(to_one), bang);
  CHECK(comp == bang);
  CHECK(check_nat_trans(whisker_left(to_one, bang)).ok());
  CHECK(check_nat_trans(whisker_right(bang, to_one)).ok());
}

// ---------------------------------------------------------------------------
// Monoidal categories

TEST_CASE("stock monoidal categories are valid") {
  for (const auto& s : stock_moncats()) {
    CAPTURE(s.name);
    CHECK(check_monoidal(s.category).ok());
  }
}

TEST_CASE("sign category: pentagon over all 16 quadruples, checker and oracle") {
  const FinMonoidalCategory sign = sign_moncat();
  REQUIRE(sign.objects() == 2);
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y)
      for (Elem z = 0; z < 2; ++z) CHECK(sign.a(x, y, z) == 2 * ((x + y + z) % 2) + x * y * z);
  CHECK(check_monoidal(sign).ok());
  const oracle::Model m = oracle::model_of(sign);
  CHECK(oracle::pentagon_failures(m).empty());
  CHECK(oracle::triangle_failures(m).empty());
}

TEST_CASE("tampered sign associators: failures located where the oracle finds them") {
  const FinMonoidalCategory sign = sign_moncat();
  std::size_t caught = 0;
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y)
      for (Elem z = 0; z < 2; ++z) {
        const auto t = tamper_associator(sign, x, y, z);
        REQUIRE(t.has_value());
        const ValidationReport r = check_monoidal(*t);
        const oracle::Model m = oracle::model_of(*t);
        CHECK(at_lists(r, "pentagon") == oracle::pentagon_failures(m));
        CHECK(at_lists(r, "triangle") == oracle::triangle_failures(m));
        caught += !r.ok();
      }
  CHECK(caught == 7);
}

TEST_CASE("oracle agrees with the checker on flip and discrete instances") {
  for (const auto& s : stock_moncats()) {
    const ValidationReport r = check_monoidal(s.category);
    const oracle::Model m = oracle::model_of(s.category);
    CHECK(at_lists(r, "pentagon") == oracle::pentagon_failures(m));
    CHECK(at_lists(r, "triangle") == oracle::triangle_failures(m));
  }
}

TEST_CASE("shift to and from bicategories") {
  for (const auto& s : stock_moncats()) {
    const DegenerateBicategory b = shift_to_bicat(s.category);
    CHECK(b.one_cells == s.category.objects());
    CHECK(b.two_cells.size() == s.category.morphisms());
    CHECK(check_degenerate_bicategory(b).ok());
    CHECK(shift_from_bicat(b) == s.category);
    CHECK(shift_to_bicat(shift_from_bicat(b)) == b);
  }
}

TEST_CASE("functor hom-sets correspond under xi") {
  const std::vector<FinMonoidalCategory> cats = {trivial_moncat(), discrete_cyclic_moncat(2), sign_moncat(),
                                                 flip_moncat()};
  for (const auto& a : cats)
    for (const auto& b : cats) {
      const auto left = enumerate_bicat_functors(shift_to_bicat(a), shift_to_bicat(b));
      const auto right = enumerate_monoidal_functors(a, b);
      REQUIRE(left.size() == right.size());
      std::vector<MonoidalFunctor> images;
      for (const auto& f : left) {
        CHECK(check_bicat_functor(f).ok());
        const MonoidalFunctor g = xi(f);
        CHECK(std::find(right.begin(), right.end(), g) != right.end());
        CHECK(std::find(images.begin(), images.end(), g) == images.end());
        images.push_back(g);
      }
    }
}

TEST_CASE("monoidal functors") {
  const FinMonoidalCategory sign = sign_moncat();
  CHECK(check_monoidal_functor(identity_monoidal_functor(sign)).ok());

  MonoidalFunctor bent = identity_monoidal_functor(sign);
  bent.phi[3] = 3;  // phi_{1,1} must live on the object 0 = 1⊗1
  const ValidationReport r = check_monoidal_functor(bent);
  CHECK(r.has("phi_boundary"));

  // phi_{A,B} = (-1)^{AB} is bilinear, so the hexagon still commutes.
  MonoidalFunctor twisted = identity_monoidal_functor(sign);
  twisted.phi[3] = 1;
  CHECK(check_monoidal_functor(twisted).ok());

  // phi_{0,1} = -1 alone is not a cocycle.
  MonoidalFunctor skewed = identity_monoidal_functor(sign);
  skewed.phi[1] = 3;
  const ValidationReport s = check_monoidal_functor(skewed);
  CHECK_FALSE(s.ok());
  CHECK((s.has("associativity") || s.has("left_unit")));
}

TEST_CASE("sign self-functors: enumeration agrees with exhaustive phi search") {
  const FinMonoidalCategory sign = sign_moncat();
  std::size_t exhaustive = 0;
  for (const auto& F : enumerate_functors(sign.base, sign.base)) {
    const std::size_t k = sign.morphisms();
    for (Elem code = 0; code < k * k * k * k * k; ++code) {
      MonoidalFunctor f{sign, sign, F.on_objects, F.on_morphisms, {}, 0};
      Elem c = code;
      for (int i = 0; i < 4; ++i, c /= k) f.phi.push_back(c % k);
      f.phi0 = c % k;
      exhaustive += check_monoidal_functor(f).ok();
    }
  }
  const auto listed = enumerate_monoidal_functors(sign, sign);
  CHECK(listed.size() == exhaustive);
  for (const auto& f : listed) CHECK(check_monoidal_functor(f).ok());
}

TEST_CASE("identity and embedded transformations are valid") {
  for (const auto& s : stock_moncats()) {
    CAPTURE(s.name);
    const MonoidalFunctor id = identity_monoidal_functor(s.category);
    const DegTransformation t = identity_deg_transformation(id);
    CHECK(t.dist == s.category.unit);
    CHECK(check_deg_transformation(t).ok());
    for (Elem a = 0; a < s.category.objects(); ++a)
      CHECK(t.components[a] == s.category.c(s.category.li(a), s.category.r(a)));

    const DegTransformation e = embed_monoidal_transformation(identity_monoidal_transformation(id));
    CHECK(e.dist == s.category.unit);
    CHECK(e.kind == TransformationKind::Oplax);
    CHECK(check_deg_transformation(e).ok());
    for (Elem a = 0; a < s.category.objects(); ++a)
      CHECK(e.components[a] == s.category.c(s.category.ri(a), s.category.l(a)));
  }
}

TEST_CASE("lax and weak checkers agree when components are invertible") {
  for (const auto& s : stock_moncats()) {
    DegTransformation t = identity_deg_transformation(identity_monoidal_functor(s.category));
    const bool weak = check_deg_transformation(t).ok();
    t.kind = TransformationKind::Lax;
    CHECK(check_deg_transformation(t).ok() == weak);
  }
}

TEST_CASE("a distinguished object outside the essential image") {
  const DegTransformation t = discrete_dist_transformation();
  const FinMonoidalCategory& m = t.target.target;
  CHECK(t.dist == 1);
  CHECK(check_deg_transformation(t).ok());
  CHECK_FALSE(find_object_isomorphism(m, t.dist, m.unit).has_value());
  const MonoidalFunctor id = identity_monoidal_functor(m);
  for (const auto& theta : enumerate_monoidal_transformations(id, id))
    CHECK(embed_monoidal_transformation(theta).dist == m.unit);
}

TEST_CASE("composition with the identity is not unital in the flip category") {
  const FinMonoidalCategory flip = flip_moncat();
  const DegTransformation t = identity_deg_transformation(identity_monoidal_functor(flip));
  const DegTransformation c = compose_deg_transformations(identity_deg_transformation(t.target), t);
  CHECK(check_deg_transformation(c).ok());
  CHECK(c.dist == flip.o(flip.unit, t.dist));
  CHECK(c.dist != t.dist);
}

TEST_CASE("bracketings of a triple composite") {
  for (const auto& s : stock_moncats()) {
    const DegTransformation t = identity_deg_transformation(identity_monoidal_functor(s.category));
    const DegTransformation left = compose_deg_transformations(compose_deg_transformations(t, t), t);
    const DegTransformation right = compose_deg_transformations(t, compose_deg_transformations(t, t));
    CHECK(check_deg_transformation(left).ok());
    CHECK(check_deg_transformation(right).ok());
    if (s.name == "flip") {
      CHECK(left.dist != right.dist);
    } else {
      CHECK(left.dist == right.dist);
    }
  }
}

TEST_CASE("unit-dist transformations are not closed under composition in flip") {
  const auto cf = find_unit_closure_failure(flip_moncat());
  REQUIRE(cf.has_value());
  CHECK(cf->first.dist == 0);
  CHECK(cf->second.dist == 0);
  CHECK(cf->composite.dist == 1);
  CHECK_FALSE(find_unit_closure_failure(sign_moncat()).has_value());
}

TEST_CASE("modifications") {
  const FinMonoidalCategory sign = sign_moncat();
  const DegTransformation t = identity_deg_transformation(identity_monoidal_functor(sign));
  CHECK(check_deg_modification({t, t, sign.id(sign.unit)}).ok());
  CHECK(check_deg_modification({t, t, 1}).ok());
  CHECK(check_deg_modification({t, t, 2}).has("gamma_boundary"));

  const DegTransformation d = discrete_dist_transformation();
  CHECK(check_deg_modification({d, d, d.target.target.id(d.dist)}).ok());
}

TEST_CASE("xi equivalence on the stock universe") {
  CHECK(check_xi_equivalence(1).equivalence);
  CHECK(check_xi_equivalence(2).equivalence);
}
