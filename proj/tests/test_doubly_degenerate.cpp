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

#include <random>
#include <vector>

#include "deglab/doubly_degenerate.hpp"
#include "doctest.h"
#include "models.hpp"
#include "oracle.hpp"

using namespace deglab;

namespace {

const CMonDIE z2e = make_cmon_die(cyclic_group(2), 0);
const CMonDIE z2g = make_cmon_die(cyclic_group(2), 1);

oracle::RawDDFunctor raw(const DDFunctor& f) { return {f.map, f.m2, f.m0}; }

}  // namespace

TEST_CASE("build_ddbicat on stock instances") {
  const DDBicat t = build_ddbicat(make_cmon_die(trivial_monoid(), 0));
  CHECK(t.cells() == 1);
  CHECK(check_ddbicat(t).ok());

  const DDBicat b = build_ddbicat(z2g);
  CHECK(check_ddbicat(b).ok());
  CHECK(b.lunit == 1);
  CHECK(b.runit == 1);
  CHECK(b.assoc == 0);

  CHECK(check_ddbicat(build_ddbicat(make_cmon_die(cyclic_group(6), 5))).ok());
  CHECK_THROWS_AS(build_ddbicat({boolean_or(), 1, std::nullopt}), InvalidInput);
}

TEST_CASE("a non-trivial associator breaks the pentagon") {
  DDBicat b = build_ddbicat(z2e);
  b.assoc = 1;
  b.assoc_inv = 1;
  const ValidationReport r = check_ddbicat(b);
  CHECK(r.has("pentagon"));
  CHECK_FALSE(oracle::pentagon_failures(oracle::model_of(b)).empty());
}

TEST_CASE("pentagon and triangle checks agree with the free-composite oracle under tampering") {
  std::mt19937_64 rng(7);
  for (const auto& s : enumerate_cmon_dies(3)) {
    if (s.monoid.size() < 2) continue;
    const DDBicat b = build_ddbicat(s);
    CHECK(oracle::pentagon_failures(oracle::model_of(b)).empty());
    CHECK(oracle::triangle_failures(oracle::model_of(b)).empty());
    for (int i = 0; i < 50; ++i) {
      const Tampering t = tamper_ddbicat(b, rng);
      const ValidationReport r = check_ddbicat(t.tampered);
      const oracle::Model m = oracle::model_of(t.tampered);
      CHECK(r.has("pentagon") == !oracle::pentagon_failures(m).empty());
      CHECK(r.has("triangle") == !oracle::triangle_failures(m).empty());
    }
  }
}

TEST_CASE("tampering changes exactly one entry") {
  std::mt19937_64 rng(3);
  const DDBicat b = build_ddbicat(make_cmon_die(cyclic_group(3), 1));
  for (int i = 0; i < 100; ++i) {
    const Tampering t = tamper_ddbicat(b, rng);
    CHECK(t.old_value != t.new_value);
    std::size_t diffs = 0;
    for (std::size_t k = 0; k < b.vcomp.cells().size(); ++k) {
      diffs += b.vcomp.cells()[k] != t.tampered.vcomp.cells()[k];
      diffs += b.hcomp.cells()[k] != t.tampered.hcomp.cells()[k];
    }
    diffs += (b.id2 != t.tampered.id2) + (b.assoc != t.tampered.assoc) +
             (b.assoc_inv != t.tampered.assoc_inv) + (b.lunit != t.tampered.lunit) +
             (b.lunit_inv != t.tampered.lunit_inv) + (b.runit != t.tampered.runit) +
             (b.runit_inv != t.tampered.runit_inv);
    CHECK(diffs == 1);
  }
}

TEST_CASE("eckmann-hilton consequences") {
  CHECK(eckmann_hilton_report(build_ddbicat(make_cmon_die(cyclic_group(3), 1))).all_pass());
  CHECK(eckmann_hilton_report(build_ddbicat(make_cmon_die(trivial_monoid(), 0))).all_pass());
  DDBicat bad = build_ddbicat(z2e);
  bad.vcomp = CayleyTable({{0, 0}, {0, 0}});
  CHECK_THROWS_AS(eckmann_hilton_report(bad), InvalidInput);
}

TEST_CASE("extract inverts build") {
  for (const CMonDIE& s : {z2g, make_cmon_die(cyclic_group(4), 2), make_cmon_die(cyclic_group(6), 5)})
    CHECK(extract_cmon_die(build_ddbicat(s)) == s);
  for (const auto& s : enumerate_cmon_dies(4)) CHECK(extract_cmon_die(build_ddbicat(s)) == s);
}

TEST_CASE("analyze_weak_functor") {
  const DDBicat be = build_ddbicat(z2e), bg = build_ddbicat(z2g);

  const WeakFunctorAnalysis id = analyze_weak_functor(be, be, {0, 1}, 0, 0);
  CHECK(id.report.ok());
  REQUIRE(id.functor.has_value());
  CHECK(id.functor->m_f() == 0);

  const WeakFunctorAnalysis forced = analyze_weak_functor(bg, bg, {0, 1}, 1, 1);
  CHECK(forced.report.ok());
  CHECK(forced.m0_from_formula == Elem{1});

  const WeakFunctorAnalysis wrong = analyze_weak_functor(bg, bg, {0, 1}, 1, 0);
  CHECK_FALSE(wrong.report.ok());
  CHECK((wrong.report.has("unit_left") || wrong.report.has("unit_right")));
  CHECK_FALSE(wrong.functor.has_value());
}

TEST_CASE("unit constraint formula") {
  CHECK(unit_constraint_for(z2g, z2g, {0, 1}, 1) == 1);
  CHECK(unit_constraint_for(z2e, z2e, {0, 1}, 1) == 1);
  const DDFunctor f = make_dd_functor(z2g, z2g, {0, 1}, 1);
  CHECK(check_dd_functor(f).ok());
}

TEST_CASE("compose_dd_functors") {
  const DDFunctor id = identity_dd_functor(z2g);
  const DDFunctor f = make_dd_functor(z2g, z2g, {0, 1}, 1);
  CHECK(compose_dd_functors(id, f) == f);
  CHECK(compose_dd_functors(f, id) == f);
  CHECK(compose_dd_functors(f, f).m2 == 0);
  CHECK_THROWS_AS(compose_dd_functors(f, identity_dd_functor(z2e)), PreconditionError);
}

TEST_CASE("composition matches the raw formula on functors over orders up to 2") {
  const DDUniverse u = build_dd_universe(2, 1);
  for (const auto& f : u.one_cells)
    for (const auto& g : u.one_cells) {
      if (!(f.target == g.source)) continue;
      const DDFunctor gf = compose_dd_functors(g, f);
      CHECK(raw(gf) == oracle::compose_raw(raw(g), raw(f), g.target.monoid.table().rows()));
      CHECK(check_dd_functor(gf).ok());
    }
}

TEST_CASE("promote_lax") {
  const DDBicat be = build_ddbicat(z2e);
  const LaxPromotion p = promote_lax(be, be, {0, 1}, 1, 1);
  CHECK(p.m2_inv == 1);
  CHECK(p.m0_inv == 1);
  CHECK(check_dd_functor(p.functor).ok());

  const LaxPromotion id = promote_lax(be, be, {0, 1}, 0, 0);
  CHECK(id.functor == identity_dd_functor(z2e));

  const DDBicat trivial = build_ddbicat(make_cmon_die(trivial_monoid(), 0));
  const DDBicat bor = build_ddbicat(make_cmon_die(boolean_or(), 0));
  CHECK_THROWS_AS(promote_lax(trivial, bor, {0}, 0, 1), InvalidInput);
}

TEST_CASE("transformations between functors") {
  const DDFunctor f = make_dd_functor(z2g, z2g, {0, 1}, 1);
  const DDFunctor g = make_dd_functor(z2g, z2g, {0, 1}, 0);
  const auto self = transformation_between(f, f);
  REQUIRE(self.has_value());
  CHECK(self->sigma == 0);
  const auto fg = transformation_between(f, g);
  REQUIRE(fg.has_value());
  CHECK(fg->sigma == 1);
  CHECK(check_dd_transformation(*fg).ok());

  const CMonDIE z2 = make_cmon_die(cyclic_group(2), 0);
  const DDFunctor zero = make_dd_functor(z2, z2, {0, 0}, 0);
  CHECK_FALSE(transformation_between(identity_dd_functor(z2), zero).has_value());
}

TEST_CASE("modifications") {
  const DDFunctor id = identity_dd_functor(z2g);
  const DDTransformation t = *transformation_between(id, id);
  CHECK(check_modification({t, 0}).ok());
  CHECK(check_modification({t, 1}).ok());

  const CMonDIE bor = make_cmon_die(boolean_or(), 0);
  const DDFunctor bid = identity_dd_functor(bor);
  CHECK(check_modification({*transformation_between(bid, bid), 1}).ok());
}

TEST_CASE("xi images") {
  CHECK(xi(z2g) == cyclic_group(2));
  CHECK(xi(make_dd_functor(z2g, z2g, {0, 1}, 1)) == identity_hom(cyclic_group(2)));
  const DDFunctor id = identity_dd_functor(z2g);
  const DDModification m{*transformation_between(id, id), 1};
  CHECK(xi(m).dimension == 3);
  CHECK(xi(m).on == identity_hom(cyclic_group(2)));
}

TEST_CASE("unfaithfulness witnesses") {
  const auto w1 = witness_xi_unfaithful(1, z2e);
  REQUIRE(w1.has_value());
  REQUIRE(w1->functors.has_value());
  CHECK(w1->functors->first.m2 == 0);
  CHECK(w1->functors->second.m2 == 1);
  CHECK(verify_xi_witness(*w1).ok());

  CHECK_FALSE(witness_xi_unfaithful(1, make_cmon_die(boolean_or(), 0)).has_value());

  const auto w3 = witness_xi_unfaithful(3, z2e);
  REQUIRE(w3.has_value());
  REQUIRE(w3->modifications.has_value());
  CHECK(w3->modifications->first.gamma == 0);
  CHECK(w3->modifications->second.gamma == 1);
  CHECK(verify_xi_witness(*w3).ok());

  CHECK_THROWS_AS(witness_xi_unfaithful(2, z2e), PreconditionError);
}

TEST_CASE("xi equivalences") {
  CHECK(check_xi2_equivalence(1).equivalence);
  CHECK(check_xi2_equivalence(3).equivalence);
  const EquivalenceReport xi1 = check_xi1_equivalence(3);
  CHECK_FALSE(xi1.equivalence);
  REQUIRE(xi1.first_failure() != nullptr);
  CHECK(xi1.first_failure()->criterion == "locally_faithful");
  CHECK(check_restricted_xi1_equivalence(3).equivalence);
}

TEST_CASE("identity-constraint restriction") {
  const DDFunctor id = identity_dd_functor(z2g);
  const DDFunctor twisted = make_dd_functor(z2g, z2g, {0, 1}, 1);
  const IdentityConstraintRestriction r = restrict_identity_constraint({id, twisted});
  REQUIRE(r.kept.size() == 1);
  CHECK(r.kept[0] == id);
  CHECK(r.dropped == 1);
  CHECK(r.closed_under_composition);
}
