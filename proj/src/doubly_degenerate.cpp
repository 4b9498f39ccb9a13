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

#include "deglab/doubly_degenerate.hpp"

#include <array>

namespace deglab {

namespace {

void check_ddbicat_shape(const DDBicat& b) {
  const std::size_t n = b.vcomp.size();
  if (n == 0) throw StructuralError("no cells", "/cells");
  if (b.hcomp.size() != n) throw StructuralError("hcomp and vcomp differ in size", "/hcomp");
  const std::array<std::pair<const char*, Elem>, 7> indices{{{"/id2", b.id2},
                                                             {"/assoc", b.assoc},
                                                             {"/assoc_inv", b.assoc_inv},
                                                             {"/lunit", b.lunit},
                                                             {"/lunit_inv", b.lunit_inv},
                                                             {"/runit", b.runit},
                                                             {"/runit_inv", b.runit_inv}}};
  for (const auto& [where, value] : indices) {
    if (value >= n) throw StructuralError("cell index out of range", where);
  }
}

void check_inverse(const DDBicat& b, Elem x, Elem inv, const char* axiom,
                   ValidationReport& report) {
  if (b.v(x, inv) != b.id2 || b.v(inv, x) != b.id2) report.add(axiom, {x, inv});
}

}  // namespace

ValidationReport check_ddbicat(const DDBicat& b) {
  check_ddbicat_shape(b);
  const std::size_t n = b.cells();
  const Elem one = b.id2;
  ValidationReport report;
  report.merge(check_monoid(FiniteMonoid(b.vcomp, b.id2)), "vcomp");

  if (b.h(one, one) != one) report.add("hcomp_identity", {one});
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q)
      for (Elem s = 0; s < n; ++s)
        for (Elem t = 0; t < n; ++t)
          if (b.h(b.v(p, q), b.v(s, t)) != b.v(b.h(p, s), b.h(q, t)))
            report.add("interchange", {p, q, s, t});

  check_inverse(b, b.assoc, b.assoc_inv, "assoc_inverse", report);
  check_inverse(b, b.lunit, b.lunit_inv, "lunit_inverse", report);
  check_inverse(b, b.runit, b.runit_inv, "runit_inverse", report);

  for (Elem x = 0; x < n; ++x) {
    if (b.v(b.runit, b.h(one, x)) != b.v(x, b.runit)) report.add("runit_naturality", {x});
    if (b.v(b.lunit, b.h(x, one)) != b.v(x, b.lunit)) report.add("lunit_naturality", {x});
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (b.v(b.assoc, b.h(b.h(x, y), z)) != b.v(b.h(x, b.h(y, z)), b.assoc))
          report.add("assoc_naturality", {x, y, z});

  const Elem a = b.assoc;
  Elem pent_lhs = b.v(a, a);
  Elem pent_rhs = b.v(b.v(b.h(one, a), a), b.h(a, one));
  if (pent_lhs != pent_rhs) {
    report.add("pentagon", {a},
               "a∘a = " + std::to_string(pent_lhs) + ", (1∗a)∘a∘(a∗1) = " +
                   std::to_string(pent_rhs));
  }
  Elem tri_lhs = b.v(b.h(one, b.runit), a);
  Elem tri_rhs = b.h(b.lunit, one);
  if (tri_lhs != tri_rhs) {
    report.add("triangle", {a, b.lunit, b.runit},
               "(1∗r)∘a = " + std::to_string(tri_lhs) + ", l∗1 = " + std::to_string(tri_rhs));
  }
  return report;
}

EHReport eckmann_hilton_report(const DDBicat& b) {
  auto valid = check_ddbicat(b);
  if (!valid.ok()) throw InvalidInput("not a doubly degenerate bicategory", valid);
  EHReport out;
  const std::size_t n = b.cells();
  const Elem one = b.id2;
  const Elem r = b.runit;
  const Elem ri = b.runit_inv;
  const Elem l = b.lunit;
  const Elem li = b.lunit_inv;
  auto v = [&](Elem x, Elem y) { return b.v(x, y); };
  auto h = [&](Elem x, Elem y) { return b.h(x, y); };
  auto conj_r = [&](Elem x) { return v(v(r, x), ri); };
  auto conj_l = [&](Elem x) { return v(v(l, x), li); };

  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (v(x, y) != v(y, x)) {
        out.commutative = false;
        out.findings.add("commutative", {x, y});
      }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (h(x, y) != v(x, y)) {
        out.hcomp_equals_vcomp = false;
        out.findings.add("hcomp_equals_vcomp", {x, y});
      }
      Elem odot = conj_r(h(x, y));
      if (odot != v(x, y) || odot != h(x, y)) {
        out.odot_agrees = false;
        out.findings.add("odot_agrees", {x, y});
      }
    }
  if (l != r) {
    out.l_equals_r = false;
    out.findings.add("l_equals_r", {l, r});
  }
  if (b.assoc != one) {
    out.assoc_trivial = false;
    out.findings.add("assoc_trivial", {b.assoc});
  }

  // β∘α rewritten step by step into α∘β; every line must evaluate equally.
  for (Elem alpha = 0; alpha < n; ++alpha)
    for (Elem beta = 0; beta < n; ++beta) {
      const std::array<Elem, 11> chain{
          v(beta, alpha),
          v(conj_r(h(one, beta)), conj_l(h(alpha, one))),
          v(conj_r(h(one, beta)), conj_r(h(alpha, one))),
          v(v(v(r, h(one, beta)), h(alpha, one)), ri),
          conj_r(h(v(one, alpha), v(beta, one))),
          conj_r(h(alpha, beta)),
          conj_r(h(v(alpha, one), v(one, beta))),
          v(v(v(r, h(alpha, one)), h(one, beta)), ri),
          v(conj_r(h(alpha, one)), conj_r(h(one, beta))),
          v(conj_l(h(alpha, one)), conj_r(h(one, beta))),
          v(alpha, beta),
      };
      for (std::size_t step = 1; step < chain.size(); ++step) {
        if (chain[step] != chain[step - 1]) {
          out.chain_holds = false;
          out.findings.add("chain", {alpha, beta, step});
          break;
        }
      }
    }
  return out;
}

CMonDIE extract_cmon_die(const DDBicat& b) {
  auto valid = check_ddbicat(b);
  if (!valid.ok()) throw InvalidInput("not a doubly degenerate bicategory", valid);
  if (b.lunit != b.runit) {
    throw RefutationAlarm("valid doubly degenerate bicategory with l != r (l = " +
                          std::to_string(b.lunit) + ", r = " + std::to_string(b.runit) + ")");
  }
  return CMonDIE{FiniteMonoid(b.vcomp, b.id2), b.lunit, b.lunit_inv};
}

DDBicat build_ddbicat(const CMonDIE& s) {
  auto valid = check_cmon_die(s);
  if (!valid.ok()) throw InvalidInput("not a commutative monoid with invertible element", valid);
  const Elem inv = s.die_inverse();
  const Elem e = s.monoid.unit();
  return DDBicat{s.monoid.table(), s.monoid.table(), e, e, e, s.die, inv, s.die, inv};
}

// ---------------------------------------------------------------------------
// Functors

Elem unit_constraint_for(const CMonDIE& source, const CMonDIE& target,
                         const std::vector<Elem>& map, Elem m2) {
  const FiniteMonoid& y = target.monoid;
  auto m2_inv = invert(y, m2);
  auto fd_inv = invert(y, map.at(source.die));
  if (!m2_inv || !fd_inv) {
    ValidationReport report;
    if (!m2_inv) report.add("m2_invertible", {m2});
    if (!fd_inv) report.add("image_of_die_invertible", {map.at(source.die)});
    throw InvalidInput("unit constraint undetermined", report);
  }
  return y.mul(y.mul(target.die, *m2_inv), *fd_inv);
}

DDFunctor make_dd_functor(const CMonDIE& source, const CMonDIE& target, std::vector<Elem> map,
                          Elem m2) {
  Elem m0 = unit_constraint_for(source, target, map, m2);
  return DDFunctor{source, target, std::move(map), m2, m0};
}

DDFunctor identity_dd_functor(const CMonDIE& x) {
  return make_dd_functor(x, x, identity_hom(x.monoid).map, x.monoid.unit());
}

ValidationReport check_dd_functor(const DDFunctor& f) {
  const FiniteMonoid& y = f.target.monoid;
  if (f.m2 >= y.size()) throw StructuralError("m2 out of range", "/m2");
  if (f.m0 >= y.size()) throw StructuralError("m0 out of range", "/m0");
  ValidationReport report;
  report.merge(check_cmon_die(f.source), "source");
  report.merge(check_cmon_die(f.target), "target");
  report.merge(check_hom(f.hom()), "hom");
  if (!report.ok()) return report;
  if (!invert(y, f.m2)) report.add("m2_invertible", {f.m2});
  if (!invert(y, f.m0)) report.add("m0_invertible", {f.m0});
  Elem rhs = y.mul(y.mul(f.map[f.source.die], f.m2), f.m0);
  if (rhs != f.target.die) {
    report.add("unit_equation", {f.m2, f.m0},
               "d_Y = " + std::to_string(f.target.die) + " but F d_X · m2 · m0 = " +
                   std::to_string(rhs));
  }
  return report;
}

namespace {

struct FunctorAxioms {
  ValidationReport report;
  bool naturality_vacuous = false;
  bool associativity_vacuous = false;
};

/// The weak/lax functor axioms evaluated with the bicategories' own tables.
FunctorAxioms functor_axioms(const DDBicat& x, const DDBicat& y, const std::vector<Elem>& map,
                             Elem m2, Elem m0) {
  FunctorAxioms out;
  const Elem one = y.id2;
  auto F = [&](Elem c) { return map[c]; };

  bool naturality_ok = true;
  for (Elem a = 0; a < x.cells(); ++a)
    for (Elem b = 0; b < x.cells(); ++b)
      if (y.v(m2, y.h(F(a), F(b))) != y.v(F(x.h(a, b)), m2)) {
        naturality_ok = false;
        out.report.add("composition_constraint_naturality", {a, b});
      }
  if (naturality_ok) {
    out.naturality_vacuous = true;
    out.report.note("naturality of the composition constraint holds for every pair");
  }

  Elem assoc_lhs = y.v(y.v(F(x.assoc), m2), y.h(m2, one));
  Elem assoc_rhs = y.v(y.v(m2, y.h(one, m2)), y.assoc);
  if (assoc_lhs != assoc_rhs) {
    out.report.add("associativity", {m2},
                   "F(a)∘m2∘(m2∗1) = " + std::to_string(assoc_lhs) + ", m2∘(1∗m2)∘a' = " +
                       std::to_string(assoc_rhs));
  } else if (assoc_lhs == y.v(m2, m2)) {
    out.associativity_vacuous = true;
    out.report.note("associativity axiom reduces to m2² = m2²");
  }

  Elem right_unit = y.v(y.v(F(x.runit), m2), y.h(m0, one));
  if (right_unit != y.runit) {
    out.report.add("unit_right", {m2, m0},
                   "r' = " + std::to_string(y.runit) + " but F(r)∘m2∘(m0∗1) = " +
                       std::to_string(right_unit));
  }
  Elem left_unit = y.v(y.v(F(x.lunit), m2), y.h(one, m0));
  if (left_unit != y.lunit) {
    out.report.add("unit_left", {m2, m0},
                   "l' = " + std::to_string(y.lunit) + " but F(l)∘m2∘(1∗m0) = " +
                       std::to_string(left_unit));
  }
  return out;
}

void require_valid(const DDBicat& b, const char* which) {
  auto report = check_ddbicat(b);
  if (!report.ok()) throw InvalidInput(std::string(which) + " is not a doubly degenerate bicategory", report);
}

void check_functor_data_shape(const DDBicat& x, const DDBicat& y, const std::vector<Elem>& map,
                              Elem m2, Elem m0) {
  if (map.size() != x.cells()) throw StructuralError("functor map has wrong length", "/map");
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] >= y.cells()) throw StructuralError("map value out of range", "/map/" + std::to_string(i));
  if (m2 >= y.cells()) throw StructuralError("m2 out of range", "/m2");
  if (m0 >= y.cells()) throw StructuralError("m0 out of range", "/m0");
}

}  // namespace

WeakFunctorAnalysis analyze_weak_functor(const DDBicat& source, const DDBicat& target,
                                         const std::vector<Elem>& map, Elem m2, Elem m0) {
  require_valid(source, "source");
  require_valid(target, "target");
  check_functor_data_shape(source, target, map, m2, m0);
  const CMonDIE x = extract_cmon_die(source);
  const CMonDIE y = extract_cmon_die(target);
  WeakFunctorAnalysis out;
  out.report.merge(check_hom({x.monoid, y.monoid, map}), "hom");
  if (!out.report.ok()) return out;

  auto axioms = functor_axioms(source, target, map, m2, m0);
  out.naturality_vacuous = axioms.naturality_vacuous;
  out.associativity_vacuous = axioms.associativity_vacuous;
  out.report.merge(axioms.report);

  if (!invert(y.monoid, m2)) out.report.add("m2_invertible", {m2}, "not invertible; see promote_lax");
  if (!invert(y.monoid, m0)) out.report.add("m0_invertible", {m0}, "not invertible; see promote_lax");
  if (invert(y.monoid, m2)) {
    out.m0_from_formula = unit_constraint_for(x, y, map, m2);
    if (*out.m0_from_formula != m0) {
      out.report.add("m0_formula", {m0},
                     "d_Y · m2⁻¹ · (F d_X)⁻¹ = " + std::to_string(*out.m0_from_formula));
    }
  }
  if (out.report.ok()) out.functor = DDFunctor{x, y, map, m2, m0};
  return out;
}

LaxPromotion promote_lax(const DDBicat& source, const DDBicat& target,
                         const std::vector<Elem>& map, Elem m2, Elem m0) {
  require_valid(source, "source");
  require_valid(target, "target");
  check_functor_data_shape(source, target, map, m2, m0);
  const CMonDIE x = extract_cmon_die(source);
  const CMonDIE y = extract_cmon_die(target);
  ValidationReport report;
  report.merge(check_hom({x.monoid, y.monoid, map}), "hom");
  if (!report.ok()) throw InvalidInput("not a lax functor", report);
  report.merge(functor_axioms(source, target, map, m2, m0).report);
  if (!report.ok()) throw InvalidInput("not a lax functor", report);

  const FiniteMonoid& ym = y.monoid;
  const Elem dy_inv = y.die_inverse();
  const Elem fdx = map[x.die];
  const Elem m0_inv = ym.mul(ym.mul(dy_inv, fdx), m2);
  const Elem m2_inv = ym.mul(ym.mul(dy_inv, fdx), m0);
  if (ym.mul(m0, m0_inv) != ym.unit() || ym.mul(m2, m2_inv) != ym.unit()) {
    throw RefutationAlarm("lax functor satisfying the unit equation with a non-invertible constraint");
  }
  return LaxPromotion{DDFunctor{x, y, map, m2, m0}, m2_inv, m0_inv};
}

DDFunctor compose_dd_functors(const DDFunctor& g, const DDFunctor& f) {
  if (!(f.target == g.source)) {
    throw PreconditionError("cannot compose: target of first functor != source of second");
  }
  const FiniteMonoid& z = g.target.monoid;
  std::vector<Elem> map(f.map.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = g.map[f.map[i]];
  Elem m2 = z.mul(g.map[f.m2], g.m2);
  Elem m0 = z.mul(g.map[f.m0], g.m0);
  return DDFunctor{f.source, g.target, std::move(map), m2, m0};
}

// ---------------------------------------------------------------------------
// Transformations and modifications

ValidationReport check_dd_transformation(const DDTransformation& t, bool lax) {
  const DDFunctor& f = t.source;
  const DDFunctor& g = t.target;
  if (!(f.source == g.source) || !(f.target == g.target)) {
    throw StructuralError("transformation between non-parallel functors");
  }
  const FiniteMonoid& y = f.target.monoid;
  if (t.sigma >= y.size()) throw StructuralError("sigma out of range", "/sigma");
  ValidationReport report;
  for (Elem a = 0; a < f.source.monoid.size(); ++a)
    if (y.mul(f.map[a], t.sigma) != y.mul(t.sigma, g.map[a])) report.add("naturality", {a});
  if (y.mul(y.mul(t.sigma, t.sigma), f.m2) != y.mul(t.sigma, g.m2)) {
    report.add("associator_axiom", {t.sigma});
  }
  Elem unit_lhs = y.mul(y.mul(t.sigma, f.m2), f.map[f.source.die]);
  Elem unit_rhs = y.mul(g.m2, g.map[g.source.die]);
  if (unit_lhs != unit_rhs) report.add("unit_axiom", {t.sigma});
  if (!lax && !invert(y, t.sigma)) report.add("sigma_invertible", {t.sigma});
  return report;
}

std::optional<DDTransformation> transformation_between(const DDFunctor& f, const DDFunctor& g) {
  if (!(f.source == g.source) || !(f.target == g.target)) {
    throw PreconditionError("transformation_between needs parallel functors");
  }
  if (f.map != g.map) return std::nullopt;
  const FiniteMonoid& y = f.target.monoid;
  auto mf_inv = invert(y, f.m2);
  if (!mf_inv) throw InvalidInput("source functor is not weak", check_dd_functor(f));
  DDTransformation t{f, g, y.mul(g.m2, *mf_inv)};
  auto report = check_dd_transformation(t);
  if (!report.ok()) {
    throw RefutationAlarm("σ = m_G · m_F⁻¹ fails the transformation axioms: " + report.summary());
  }
  return t;
}

DDTransformation compose_dd_transformations(const DDTransformation& t2,
                                            const DDTransformation& t1) {
  if (!(t1.target == t2.source)) throw PreconditionError("transformations are not composable");
  const FiniteMonoid& y = t1.source.target.monoid;
  return DDTransformation{t1.source, t2.target, y.mul(t2.sigma, t1.sigma)};
}

DDTransformation hcompose_dd_transformations(const DDTransformation& tau,
                                             const DDTransformation& sigma) {
  auto t = transformation_between(compose_dd_functors(tau.source, sigma.source),
                                  compose_dd_functors(tau.target, sigma.target));
  if (!t) throw RefutationAlarm("horizontal composite of transformations does not exist");
  return *t;
}

ValidationReport check_modification(const DDModification& m) {
  const FiniteMonoid& y = m.boundary.source.target.monoid;
  if (m.gamma >= y.size()) throw StructuralError("gamma out of range", "/gamma");
  ValidationReport report;
  report.merge(check_dd_transformation(m.boundary), "boundary");
  const Elem s = m.boundary.sigma;
  if (y.mul(s, m.gamma) != y.mul(m.gamma, s)) report.add("commutes_with_sigma", {s, m.gamma});
  return report;
}

// ---------------------------------------------------------------------------
// ξ

FiniteMonoid xi(const CMonDIE& x) { return x.monoid; }
MonoidHom xi(const DDFunctor& f) { return f.hom(); }
IdentityCell xi(const DDTransformation& t) { return {2, t.source.hom()}; }
IdentityCell xi(const DDModification& m) { return {3, m.boundary.source.hom()}; }

std::optional<XiUnfaithfulWitness> witness_xi_unfaithful(int j, const CMonDIE& y) {
  if (j != 1 && j != 3) throw PreconditionError("witness_xi_unfaithful needs j = 1 or j = 3");
  auto valid = check_cmon_die(y);
  if (!valid.ok()) throw InvalidInput("not a commutative monoid with invertible element", valid);
  const FiniteMonoid& m = y.monoid;
  XiUnfaithfulWitness w;
  w.j = j;
  if (j == 1) {
    for (Elem u : invertible_elements(m)) {
      if (u == m.unit()) continue;
      auto id = identity_hom(m).map;
      w.functors = std::make_pair(make_dd_functor(y, y, id, m.unit()), make_dd_functor(y, y, id, u));
      return w;
    }
    return std::nullopt;
  }
  for (Elem g = 0; g < m.size(); ++g) {
    if (g == m.unit()) continue;
    DDFunctor id = identity_dd_functor(y);
    DDTransformation t = *transformation_between(id, id);
    w.modifications = std::make_pair(DDModification{t, m.unit()}, DDModification{t, g});
    return w;
  }
  return std::nullopt;
}

ValidationReport verify_xi_witness(const XiUnfaithfulWitness& w) {
  ValidationReport report;
  if (w.j == 1) {
    if (!w.functors) {
      report.add("witness_present", {});
      return report;
    }
    const auto& [a, b] = *w.functors;
    report.merge(check_dd_functor(a), "first");
    report.merge(check_dd_functor(b), "second");
    if (!(a.source == b.source) || !(a.target == b.target)) report.add("parallel", {});
    if (a == b) report.add("distinct", {});
    if (!(xi(a) == xi(b))) report.add("same_image", {});
  } else if (w.j == 3) {
    if (!w.modifications) {
      report.add("witness_present", {});
      return report;
    }
    const auto& [a, b] = *w.modifications;
    report.merge(check_modification(a), "first");
    report.merge(check_modification(b), "second");
    if (!(a.boundary == b.boundary)) report.add("parallel", {});
    if (a == b) report.add("distinct", {});
    if (!(xi(a) == xi(b))) report.add("same_image", {});
  } else {
    report.add("dimension", {static_cast<Elem>(w.j)});
  }
  return report;
}

// ---------------------------------------------------------------------------
// Tampering

nlohmann::json Tampering::describe() const {
  return {{"field", field}, {"position", position}, {"old", old_value}, {"new", new_value}};
}

Tampering tamper_ddbicat(const DDBicat& b, std::mt19937_64& rng) {
  const std::size_t n = b.cells();
  if (n < 2) throw PreconditionError("tampering needs at least two cells");
  static constexpr std::array<const char*, 9> kFields{
      "vcomp", "hcomp", "id2", "assoc", "assoc_inv", "lunit", "lunit_inv", "runit", "runit_inv"};
  std::uniform_int_distribution<std::size_t> pick_field(0, kFields.size() - 1);
  std::uniform_int_distribution<Elem> pick_cell(0, n - 1);
  std::uniform_int_distribution<Elem> pick_other(1, n - 1);

  Tampering t{b, kFields[pick_field(rng)], {}, 0, 0};
  auto shifted = [&](Elem old) { return (old + pick_other(rng)) % n; };
  const std::string& field = t.field;
  if (field == "vcomp" || field == "hcomp") {
    Elem x = pick_cell(rng);
    Elem y = pick_cell(rng);
    const CayleyTable& table = field == "vcomp" ? b.vcomp : b.hcomp;
    std::vector<Elem> cells = table.cells();
    t.position = {x, y};
    t.old_value = cells[x * n + y];
    t.new_value = shifted(t.old_value);
    cells[x * n + y] = t.new_value;
    (field == "vcomp" ? t.tampered.vcomp : t.tampered.hcomp) = CayleyTable(n, std::move(cells));
    return t;
  }
  Elem DDBicat::*member = nullptr;
  if (field == "id2") member = &DDBicat::id2;
  if (field == "assoc") member = &DDBicat::assoc;
  if (field == "assoc_inv") member = &DDBicat::assoc_inv;
  if (field == "lunit") member = &DDBicat::lunit;
  if (field == "lunit_inv") member = &DDBicat::lunit_inv;
  if (field == "runit") member = &DDBicat::runit;
  if (field == "runit_inv") member = &DDBicat::runit_inv;
  t.old_value = b.*member;
  t.new_value = shifted(t.old_value);
  t.tampered.*member = t.new_value;
  return t;
}

}  // namespace deglab
