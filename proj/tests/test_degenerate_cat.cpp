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

#include "deglab/degenerate_cat.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace deglab;

TEST_CASE("monoid and category round trips") {
  for (const FiniteMonoid& m : {trivial_monoid(), cyclic_group(2), boolean_or(), left_zero_with_unit()}) {
    const DegenerateCategory c = monoid_to_cat(m);
    CHECK(c.object_label == kSingleObject);
    CHECK(c.hom.size() == m.size());
    CHECK(check_degenerate_category(c).ok());
    CHECK(cat_to_monoid(c) == m);
  }
  CHECK(monoid_to_cat(cyclic_group(2)).hom.size() == 2);
  CHECK_THROWS_AS(monoid_to_cat(FiniteMonoid({{0, 1}, {0, 0}}, 0)), InvalidInput);
}

TEST_CASE("category axioms mirror monoid axioms") {
  const DegenerateCategory bad{kSingleObject, FiniteMonoid({{0, 1}, {0, 0}}, 0)};
  CHECK(check_degenerate_category(bad).has("right_identity"));
  const DegenerateCategory relabeled{"x", cyclic_group(2)};
  CHECK(check_degenerate_category(relabeled).has("object_label"));
}

TEST_CASE("functors between one-object categories are monoid homs") {
  const std::vector<FiniteMonoid> ms = {trivial_monoid(), cyclic_group(2), boolean_or(), cyclic_group(3),
                                        left_zero_with_unit()};
  for (const auto& x : ms)
    for (const auto& y : ms) {
      const auto functors = enumerate_deg_functors(monoid_to_cat(x), monoid_to_cat(y));
      const auto homs = enumerate_homs(x, y);
      REQUIRE(functors.size() == homs.size());
      for (const auto& f : functors) {
        CHECK(check_deg_functor(f).ok());
        CHECK(std::find(homs.begin(), homs.end(), functor_to_hom(f)) != homs.end());
      }
    }
}

TEST_CASE("natural transformations are elements satisfying the commutation condition") {
  const FiniteMonoid z2 = cyclic_group(2);
  const MonoidHom id = identity_hom(z2), unit = trivial_hom(z2, z2);
  CHECK(check_nat_trans({id, id, 0}).ok());
  CHECK(check_nat_trans({id, id, 1}).ok());
  const ValidationReport r = check_nat_trans({id, unit, 0});
  REQUIRE(r.count("naturality") == 1);
  CHECK(r.by_axiom("naturality")[0].at == std::vector<Elem>{1});
  CHECK_THROWS_AS(check_nat_trans({id, trivial_hom(z2, boolean_or()), 0}), StructuralError);
}

TEST_CASE("check_nat_trans agrees with the raw oracle") {
  const std::vector<FiniteMonoid> ms = {cyclic_group(2), boolean_or(), cyclic_group(3), left_zero_with_unit()};
  for (const auto& x : ms)
    for (const auto& y : ms) {
      const auto homs = enumerate_homs(x, y);
      for (const auto& F : homs)
        for (const auto& G : homs)
          for (Elem d = 0; d < y.size(); ++d)
            CHECK(check_nat_trans({F, G, d}).ok() == oracle::is_natural(y.table().rows(), F.map, G.map, d));
    }
}

TEST_CASE("non-identity endo-transformations of the identity") {
  const auto z2 = find_nonidentity_nat_trans(cyclic_group(2));
  REQUIRE(z2.has_value());
  CHECK(z2->d == 1);
  CHECK(check_nat_trans(*z2).ok());
  CHECK_FALSE(find_nonidentity_nat_trans(trivial_monoid()).has_value());
  CHECK_FALSE(find_nonidentity_nat_trans(left_zero_with_unit()).has_value());
  CHECK(center(left_zero_with_unit()) == std::vector<Elem>{0});
}

TEST_CASE("phi_1 on small samples") {
  std::vector<DegenerateCategory> sample;
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& m : enumerate_monoids(n, false)) sample.push_back(monoid_to_cat(m));
  const EquivalenceReport r = phi1_check(sample);
  CHECK(r.equivalence);
  CHECK(r.first_failure() == nullptr);

  const EquivalenceReport single = phi1_check({monoid_to_cat(trivial_monoid())});
  CHECK(single.equivalence);
}
