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

#include <string>

#include "deglab/serialize.hpp"
#include "deglab/suites.hpp"
#include "doctest.h"

using namespace deglab;

namespace {

template <class T, class Reader>
void round_trip(const T& value, Reader read) {
  const std::string text = canonical_dump(to_document(value));
  CHECK(text.back() == '\n');
  CHECK(text.find(' ') == std::string::npos);
  const T back = read(parse_document(text), "");
  CHECK(back == value);
  CHECK(canonical_dump(to_document(back)) == text);
}

std::string pointer_of(const std::string& text) {
  try {
    validate_document(parse_document(text));
  } catch (const StructuralError& e) {
    return e.pointer();
  }
  return "<none>";
}

const CMonDIE z2g = make_cmon_die(cyclic_group(2), 1);

}  // namespace

TEST_CASE("documents round trip byte for byte") {
  round_trip(cyclic_group(3), read_monoid);
  round_trip(z2g, read_cmon_die);
  round_trip(identity_hom(boolean_or()), read_monoid_hom);
  round_trip(monoid_to_cat(boolean_or()), read_degenerate_category);
  round_trip(build_ddbicat(z2g), read_ddbicat);
  const DDFunctor f = make_dd_functor(z2g, z2g, {0, 1}, 1);
  round_trip(f, read_dd_functor);
  const DDTransformation t = *transformation_between(f, identity_dd_functor(z2g));
  round_trip(t, read_dd_transformation);
  round_trip(DDModification{t, 1}, read_dd_modification);
  round_trip(arrow_category(), read_category);
  round_trip(identity_functor(arrow_category()), read_functor);
  round_trip(identity_nat_trans(identity_functor(arrow_category())), read_natural_transformation);
  for (const auto& s : stock_moncats()) {
    round_trip(s.category, read_moncat);
    round_trip(shift_to_bicat(s.category), read_degenerate_bicategory);
    const MonoidalFunctor id = identity_monoidal_functor(s.category);
    round_trip(id, read_monoidal_functor);
    round_trip(identity_monoidal_transformation(id), read_monoidal_transformation);
    const DegTransformation d = identity_deg_transformation(id);
    round_trip(d, read_deg_transformation);
    round_trip(DegModification{d, d, s.category.id(d.dist)}, read_deg_modification);
  }
  const auto bf = enumerate_bicat_functors(shift_to_bicat(sign_moncat()), shift_to_bicat(sign_moncat()));
  REQUIRE_FALSE(bf.empty());
  round_trip(bf.front(), read_bicat_functor);
  const FinMonad m = terminal_object_monad();
  round_trip(m, read_monad);
  round_trip(identity_monad_functor(m), read_monad_functor);
  round_trip(identity_monad_transformation(identity_monad_functor(m)), read_monad_transformation);
}

TEST_CASE("nat_trans documents") {
  const DegNatTrans t{identity_hom(cyclic_group(2)), identity_hom(cyclic_group(2)), 1};
  const DegNatTrans back = read_nat_trans(parse_document(canonical_dump(to_document(t))));
  CHECK(back.F == t.F);
  CHECK(back.G == t.G);
  CHECK(back.d == t.d);
}

TEST_CASE("canonical form sorts keys") {
  const json a = parse_document(R"({"unit":0,"size":1,"kind":"monoid","mul":[[0]]})");
  CHECK(canonical_dump(a) == "{\"kind\":\"monoid\",\"mul\":[[0]],\"size\":1,\"unit\":0}\n");
}

TEST_CASE("schema violations name the offending key") {
  CHECK(pointer_of(R"({"kind":"monoid","size":2,"unit":0,"mul":[[0,1],[1,0]],"extra":1})") == "/extra");
  CHECK(pointer_of(R"({"kind":"monoid","size":2,"unit":0,"mul":[[0,1],[1,2]]})") == "/mul/1/1");
  CHECK(pointer_of(R"({"kind":"monoid","size":2,"unit":"0","mul":[[0,1],[1,0]]})") == "/unit");
  CHECK(pointer_of(R"({"kind":"monoid","size":2,"unit":0})") == "/mul");
  CHECK(pointer_of(R"({"size":2})") == "/kind");
  CHECK(pointer_of(R"({"kind":"cmon_die","size":2,"unit":0,"mul":[[0,1],[1,0]],"die":5})") == "/die");
  CHECK_THROWS_AS(parse_document("{not json"), StructuralError);
  CHECK_THROWS_AS(validate_document(parse_document(R"({"kind":"no_such_kind"})")), StructuralError);
}

TEST_CASE("validate_document verdicts") {
  CHECK(validate_document(to_document(build_ddbicat(z2g))).holds());
  CHECK_FALSE(validate_document(parse_document(R"({"kind":"monoid","size":2,"unit":0,"mul":[[0,1],[0,0]]})")).holds());
  CHECK(validate_document(to_document(sign_moncat())).holds());
  const auto w = witness_xi_unfaithful(1, make_cmon_die(cyclic_group(2), 0));
  CHECK(validate_document(xi_witness_document(*w)).holds());
  CHECK(validate_document(outside_essential_image_document(discrete_dist_transformation())).holds());
}

TEST_CASE("claim documents fail when the phenomenon is absent") {
  const DegTransformation strict = identity_deg_transformation(identity_monoidal_functor(sign_moncat()));
  CHECK_FALSE(validate_document(unitality_failure_document(strict)).holds());
  CHECK_FALSE(validate_document(outside_essential_image_document(strict)).holds());
}
