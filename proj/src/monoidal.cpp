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

#include "deglab/monoidal.hpp"

namespace deglab {

namespace {

std::string idx(Elem i) { return "/" + std::to_string(i); }

void check_table(const std::vector<std::vector<Elem>>& t, std::size_t n, std::size_t range,
                 const std::string& where) {
  if (t.size() != n) throw StructuralError("table has wrong size", where);
  for (Elem i = 0; i < n; ++i) {
    if (t[i].size() != n) throw StructuralError("row has wrong size", where + idx(i));
    for (Elem j = 0; j < n; ++j)
      if (t[i][j] >= range) throw StructuralError("entry out of range", where + idx(i) + idx(j));
  }
}

void check_list(const std::vector<Elem>& v, std::size_t n, std::size_t range,
                const std::string& where) {
  if (v.size() != n) throw StructuralError("list has wrong length", where);
  for (Elem i = 0; i < n; ++i)
    if (v[i] >= range) throw StructuralError("entry out of range", where + idx(i));
}

bool has_boundary(const FiniteCategory& c, Elem f, Elem src, Elem tgt) {
  return c.src(f) == src && c.tgt(f) == tgt;
}

bool is_iso(const FiniteCategory& c, Elem f) { return inverse_morphism(c, f).has_value(); }

}  // namespace

void check_monoidal_shape(const FinMonoidalCategory& m) {
  check_category_shape(m.base);
  const std::size_t n = m.objects();
  const std::size_t k = m.morphisms();
  check_table(m.tensor_obj, n, n, "/tensor_obj");
  check_table(m.tensor_mor, k, k, "/tensor_mor");
  if (m.unit >= n) throw StructuralError("unit object out of range", "/unit");
  check_list(m.assoc, n * n * n, k, "/assoc");
  check_list(m.assoc_inv, n * n * n, k, "/assoc_inv");
  check_list(m.lunit, n, k, "/lunit");
  check_list(m.lunit_inv, n, k, "/lunit_inv");
  check_list(m.runit, n, k, "/runit");
  check_list(m.runit_inv, n, k, "/runit_inv");
}

ValidationReport check_monoidal(const FinMonoidalCategory& m) {
  check_monoidal_shape(m);
  ValidationReport report;
  report.merge(check_category(m.base), "base");
  if (!report.ok()) return report;

  const FiniteCategory& c = m.base;
  const std::size_t n = m.objects();
  const std::size_t k = m.morphisms();
  const Elem I = m.unit;

  for (Elem f = 0; f < k; ++f)
    for (Elem g = 0; g < k; ++g)
      if (!has_boundary(c, m.t(f, g), m.o(c.src(f), c.src(g)), m.o(c.tgt(f), c.tgt(g))))
        report.add("tensor_boundary", {f, g});
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        const Elem left = m.o(m.o(x, y), z);
        const Elem right = m.o(x, m.o(y, z));
        if (!has_boundary(c, m.a(x, y, z), left, right)) report.add("constraint_boundary", {x, y, z}, "assoc");
        if (!has_boundary(c, m.ai(x, y, z), right, left)) report.add("constraint_boundary", {x, y, z}, "assoc_inv");
      }
  for (Elem x = 0; x < n; ++x) {
    if (!has_boundary(c, m.l(x), m.o(I, x), x)) report.add("constraint_boundary", {x}, "lunit");
    if (!has_boundary(c, m.li(x), x, m.o(I, x))) report.add("constraint_boundary", {x}, "lunit_inv");
    if (!has_boundary(c, m.r(x), m.o(x, I), x)) report.add("constraint_boundary", {x}, "runit");
    if (!has_boundary(c, m.ri(x), x, m.o(x, I))) report.add("constraint_boundary", {x}, "runit_inv");
  }
  if (!report.ok()) return report;

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (m.t(m.id(x), m.id(y)) != m.id(m.o(x, y))) report.add("tensor_identity", {x, y});
  for (Elem f = 0; f < k; ++f)
    for (Elem g = 0; g < k; ++g) {
      if (c.tgt(f) != c.src(g)) continue;
      for (Elem f2 = 0; f2 < k; ++f2)
        for (Elem g2 = 0; g2 < k; ++g2) {
          if (c.tgt(f2) != c.src(g2)) continue;
          if (m.t(m.c(g, f), m.c(g2, f2)) != m.c(m.t(g, g2), m.t(f, f2)))
            report.add("tensor_interchange", {g, f, g2, f2});
        }
    }

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (m.c(m.ai(x, y, z), m.a(x, y, z)) != m.id(m.o(m.o(x, y), z)) ||
            m.c(m.a(x, y, z), m.ai(x, y, z)) != m.id(m.o(x, m.o(y, z))))
          report.add("assoc_inverse", {x, y, z});
      }
  for (Elem x = 0; x < n; ++x) {
    if (m.c(m.li(x), m.l(x)) != m.id(m.o(I, x)) || m.c(m.l(x), m.li(x)) != m.id(x))
      report.add("lunit_inverse", {x});
    if (m.c(m.ri(x), m.r(x)) != m.id(m.o(x, I)) || m.c(m.r(x), m.ri(x)) != m.id(x))
      report.add("runit_inverse", {x});
  }

  for (Elem f = 0; f < k; ++f)
    for (Elem g = 0; g < k; ++g)
      for (Elem h = 0; h < k; ++h) {
        const Elem lhs = m.c(m.a(c.tgt(f), c.tgt(g), c.tgt(h)), m.t(m.t(f, g), h));
        const Elem rhs = m.c(m.t(f, m.t(g, h)), m.a(c.src(f), c.src(g), c.src(h)));
        if (lhs != rhs) report.add("assoc_naturality", {f, g, h});
      }
  for (Elem f = 0; f < k; ++f) {
    if (m.c(m.l(c.tgt(f)), m.t(m.id(I), f)) != m.c(f, m.l(c.src(f)))) report.add("lunit_naturality", {f});
    if (m.c(m.r(c.tgt(f)), m.t(f, m.id(I))) != m.c(f, m.r(c.src(f)))) report.add("runit_naturality", {f});
  }

  for (Elem w = 0; w < n; ++w)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z) {
          const Elem lhs = m.c(m.a(w, x, m.o(y, z)), m.a(m.o(w, x), y, z));
          const Elem rhs = m.c({m.t(m.id(w), m.a(x, y, z)), m.a(w, m.o(x, y), z),
                                m.t(m.a(w, x, y), m.id(z))});
          if (lhs != rhs) {
            report.add("pentagon", {w, x, y, z},
                       "two-step side " + std::to_string(lhs) + ", three-step side " +
                           std::to_string(rhs));
          }
        }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem lhs = m.c(m.t(m.id(x), m.l(y)), m.a(x, I, y));
      const Elem rhs = m.t(m.r(x), m.id(y));
      if (lhs != rhs) report.add("triangle", {x, y});
    }
  return report;
}

std::optional<FinMonoidalCategory> tamper_associator(const FinMonoidalCategory& m, Elem a,
                                                     Elem b, Elem c) {
  check_monoidal_shape(m);
  const Elem old = m.a(a, b, c);
  const FiniteCategory& base = m.base;
  for (Elem f : base.hom(base.src(old), base.tgt(old))) {
    if (f == old) continue;
    if (auto inv = inverse_morphism(base, f)) {
      FinMonoidalCategory out = m;
      out.assoc[m.triple(a, b, c)] = f;
      out.assoc_inv[m.triple(a, b, c)] = *inv;
      return out;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Monoidal functors

ValidationReport check_monoidal_functor(const MonoidalFunctor& f, bool lax) {
  const FinMonoidalCategory& x = f.source;
  const FinMonoidalCategory& y = f.target;
  check_monoidal_shape(x);
  check_monoidal_shape(y);
  const std::size_t n = x.objects();
  check_list(f.on_objects, n, y.objects(), "/on_objects");
  check_list(f.on_morphisms, x.morphisms(), y.morphisms(), "/on_morphisms");
  check_list(f.phi, n * n, y.morphisms(), "/phi");
  if (f.phi0 >= y.morphisms()) throw StructuralError("phi0 out of range", "/phi0");

  ValidationReport report;
  report.merge(check_functor(f.functor()), "functor");
  if (!report.ok()) return report;

  const FiniteCategory& yc = y.base;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (!has_boundary(yc, f.p(a, b), y.o(f.obj(a), f.obj(b)), f.obj(x.o(a, b))))
        report.add("phi_boundary", {a, b});
  if (!has_boundary(yc, f.phi0, y.unit, f.obj(x.unit))) report.add("phi_boundary", {}, "phi0");
  if (!report.ok()) return report;

  const FiniteCategory& xc = x.base;
  for (Elem g = 0; g < x.morphisms(); ++g)
    for (Elem h = 0; h < x.morphisms(); ++h) {
      const Elem lhs = y.c(f.p(xc.tgt(g), xc.tgt(h)), y.t(f(g), f(h)));
      const Elem rhs = y.c(f(x.t(g, h)), f.p(xc.src(g), xc.src(h)));
      if (lhs != rhs) report.add("phi_naturality", {g, h});
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = y.c({f(x.a(a, b, c)), f.p(x.o(a, b), c), y.t(f.p(a, b), y.id(f.obj(c)))});
        const Elem rhs = y.c({f.p(a, x.o(b, c)), y.t(y.id(f.obj(a)), f.p(b, c)),
                              y.a(f.obj(a), f.obj(b), f.obj(c))});
        if (lhs != rhs) report.add("associativity", {a, b, c});
      }
  for (Elem a = 0; a < n; ++a) {
    const Elem fa = f.obj(a);
    if (y.c({f(x.l(a)), f.p(x.unit, a), y.t(f.phi0, y.id(fa))}) != y.l(fa)) report.add("left_unit", {a});
    if (y.c({f(x.r(a)), f.p(a, x.unit), y.t(y.id(fa), f.phi0)}) != y.r(fa)) report.add("right_unit", {a});
  }
  if (!lax) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (!is_iso(yc, f.p(a, b))) report.add("phi_invertible", {a, b});
    if (!is_iso(yc, f.phi0)) report.add("phi_invertible", {}, "phi0");
  }
  return report;
}

MonoidalFunctor identity_monoidal_functor(const FinMonoidalCategory& m) {
  FinFunctor id = identity_functor(m.base);
  MonoidalFunctor f{m, m, id.on_objects, id.on_morphisms, {}, m.id(m.unit)};
  for (Elem a = 0; a < m.objects(); ++a)
    for (Elem b = 0; b < m.objects(); ++b) f.phi.push_back(m.id(m.o(a, b)));
  return f;
}

MonoidalFunctor compose_monoidal_functors(const MonoidalFunctor& g, const MonoidalFunctor& f) {
  if (!(f.target == g.source)) throw PreconditionError("monoidal functors are not composable");
  const FinMonoidalCategory& z = g.target;
  FinFunctor gf = compose_functors(g.functor(), f.functor());
  MonoidalFunctor out{f.source, z, gf.on_objects, gf.on_morphisms, {}, z.c(g(f.phi0), g.phi0)};
  for (Elem a = 0; a < f.source.objects(); ++a)
    for (Elem b = 0; b < f.source.objects(); ++b)
      out.phi.push_back(z.c(g(f.p(a, b)), g.p(f.obj(a), f.obj(b))));
  return out;
}

std::vector<MonoidalFunctor> enumerate_monoidal_functors(const FinMonoidalCategory& source,
                                                         const FinMonoidalCategory& target,
                                                         bool lax) {
  const std::size_t n = source.objects();
  const FiniteCategory& yc = target.base;
  std::vector<MonoidalFunctor> out;
  for (const FinFunctor& base : enumerate_functors(source.base, target.base)) {
    // Candidate constraint components, pair (a, b) at a*n + b, φ0 last.
    std::vector<std::vector<Elem>> choices;
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        choices.push_back(yc.hom(target.o(base.obj(a), base.obj(b)), base.obj(source.o(a, b))));
    choices.push_back(yc.hom(target.unit, base.obj(source.unit)));
    if (!lax) {
      for (auto& list : choices)
        std::erase_if(list, [&](Elem g) { return !is_iso(yc, g); });
    }
    bool empty = false;
    for (const auto& list : choices) empty = empty || list.empty();
    if (empty) continue;

    std::vector<std::size_t> pos(choices.size(), 0);
    while (true) {
      MonoidalFunctor f{source, target, base.on_objects, base.on_morphisms, {}, 0};
      for (std::size_t i = 0; i + 1 < choices.size(); ++i) f.phi.push_back(choices[i][pos[i]]);
      f.phi0 = choices.back()[pos.back()];
      if (check_monoidal_functor(f, lax).ok()) out.push_back(std::move(f));
      std::size_t i = 0;
      while (i < pos.size() && ++pos[i] == choices[i].size()) pos[i++] = 0;
      if (i == pos.size()) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monoidal transformations

namespace {

void require_parallel(const MonoidalFunctor& f, const MonoidalFunctor& g) {
  if (!(f.source == g.source) || !(f.target == g.target)) {
    throw StructuralError("transformation between non-parallel monoidal functors");
  }
}

}  // namespace

ValidationReport check_monoidal_transformation(const MonoidalTransformation& t) {
  const MonoidalFunctor& f = t.source;
  const MonoidalFunctor& g = t.target;
  require_parallel(f, g);
  const FinMonoidalCategory& x = f.source;
  const FinMonoidalCategory& y = f.target;
  check_list(t.components, x.objects(), y.morphisms(), "/components");
  ValidationReport report;
  report.merge(check_monoidal_functor(f), "source");
  report.merge(check_monoidal_functor(g), "target");
  if (!report.ok()) return report;
  for (Elem a = 0; a < x.objects(); ++a)
    if (!has_boundary(y.base, t.components[a], f.obj(a), g.obj(a))) report.add("component_boundary", {a});
  if (!report.ok()) return report;
  const auto& th = t.components;
  for (Elem h = 0; h < x.morphisms(); ++h) {
    if (y.c(g(h), th[x.base.src(h)]) != y.c(th[x.base.tgt(h)], f(h))) report.add("naturality", {h});
  }
  for (Elem a = 0; a < x.objects(); ++a)
    for (Elem b = 0; b < x.objects(); ++b)
      if (y.c(th[x.o(a, b)], f.p(a, b)) != y.c(g.p(a, b), y.t(th[a], th[b])))
        report.add("tensor_compatible", {a, b});
  if (y.c(th[x.unit], f.phi0) != g.phi0) report.add("unit_compatible", {});
  return report;
}

MonoidalTransformation identity_monoidal_transformation(const MonoidalFunctor& f) {
  MonoidalTransformation t{f, f, {}};
  for (Elem a = 0; a < f.source.objects(); ++a) t.components.push_back(f.target.id(f.obj(a)));
  return t;
}

MonoidalTransformation compose_monoidal_transformations(const MonoidalTransformation& t2,
                                                        const MonoidalTransformation& t1) {
  if (!(t1.target == t2.source)) throw PreconditionError("transformations are not composable");
  MonoidalTransformation out{t1.source, t2.target, {}};
  for (Elem a = 0; a < t1.components.size(); ++a)
    out.components.push_back(t1.source.target.c(t2.components[a], t1.components[a]));
  return out;
}

std::vector<MonoidalTransformation> enumerate_monoidal_transformations(const MonoidalFunctor& f,
                                                                       const MonoidalFunctor& g) {
  require_parallel(f, g);
  const std::size_t n = f.source.objects();
  std::vector<std::vector<Elem>> choices;
  for (Elem a = 0; a < n; ++a) {
    choices.push_back(f.target.base.hom(f.obj(a), g.obj(a)));
    if (choices.back().empty()) return {};
  }
  std::vector<MonoidalTransformation> out;
  std::vector<std::size_t> pos(n, 0);
  while (true) {
    MonoidalTransformation t{f, g, {}};
    for (Elem a = 0; a < n; ++a) t.components.push_back(choices[a][pos[a]]);
    if (check_monoidal_transformation(t).ok()) out.push_back(std::move(t));
    std::size_t i = 0;
    while (i < n && ++pos[i] == choices[i].size()) pos[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Transformations with a distinguished object

const char* to_string(TransformationKind k) {
  switch (k) {
    case TransformationKind::Weak:
      return "weak";
    case TransformationKind::Lax:
      return "lax";
    case TransformationKind::Oplax:
      return "oplax";
  }
  return "weak";
}

TransformationKind transformation_kind_from_string(const std::string& s) {
  if (s == "weak") return TransformationKind::Weak;
  if (s == "lax") return TransformationKind::Lax;
  if (s == "oplax") return TransformationKind::Oplax;
  throw StructuralError("unknown transformation variant '" + s + "'", "/variant");
}

ValidationReport check_deg_transformation(const DegTransformation& t) {
  const MonoidalFunctor& f = t.source;
  const MonoidalFunctor& g = t.target;
  require_parallel(f, g);
  const FinMonoidalCategory& x = f.source;
  const FinMonoidalCategory& y = f.target;
  if (t.dist >= y.objects()) throw StructuralError("distinguished object out of range", "/dist");
  check_list(t.components, x.objects(), y.morphisms(), "/components");

  ValidationReport report;
  report.merge(check_monoidal_functor(f), "source");
  report.merge(check_monoidal_functor(g), "target");
  if (!report.ok()) return report;

  const Elem al = t.dist;
  const Elem one = y.id(al);
  const bool oplax = t.kind == TransformationKind::Oplax;
  const auto& c = t.components;
  for (Elem a = 0; a < x.objects(); ++a) {
    const bool ok = oplax ? has_boundary(y.base, c[a], y.o(al, f.obj(a)), y.o(g.obj(a), al))
                          : has_boundary(y.base, c[a], y.o(g.obj(a), al), y.o(al, f.obj(a)));
    if (!ok) report.add("component_boundary", {a});
  }
  if (!report.ok()) return report;

  const FiniteCategory& xc = x.base;
  for (Elem h = 0; h < x.morphisms(); ++h) {
    const Elem s = xc.src(h);
    const Elem e = xc.tgt(h);
    const Elem lhs = oplax ? y.c(y.t(g(h), one), c[s]) : y.c(y.t(one, f(h)), c[s]);
    const Elem rhs = oplax ? y.c(c[e], y.t(one, f(h))) : y.c(c[e], y.t(g(h), one));
    if (lhs != rhs) report.add("naturality", {h});
  }

  for (Elem a = 0; a < x.objects(); ++a)
    for (Elem b = 0; b < x.objects(); ++b) {
      const Elem fa = f.obj(a), fb = f.obj(b), ga = g.obj(a), gb = g.obj(b);
      Elem lhs, rhs;
      if (oplax) {
        lhs = y.c(c[x.o(a, b)], y.t(one, f.p(a, b)));
        rhs = y.c({y.t(g.p(a, b), one), y.ai(ga, gb, al), y.t(y.id(ga), c[b]), y.a(ga, al, fb),
                   y.t(c[a], y.id(fb)), y.ai(al, fa, fb)});
      } else {
        lhs = y.c(c[x.o(a, b)], y.t(g.p(a, b), one));
        rhs = y.c({y.t(one, f.p(a, b)), y.a(al, fa, fb), y.t(c[a], y.id(fb)), y.ai(ga, al, fb),
                   y.t(y.id(ga), c[b]), y.a(ga, gb, al)});
      }
      if (lhs != rhs) report.add("composition", {a, b});
    }

  const Elem lhs = oplax ? y.c(c[x.unit], y.t(one, f.phi0)) : y.c(c[x.unit], y.t(g.phi0, one));
  const Elem rhs = oplax ? y.c({y.t(g.phi0, one), y.li(al), y.r(al)})
                         : y.c({y.t(one, f.phi0), y.ri(al), y.l(al)});
  if (lhs != rhs) report.add("unit", {});

  if (t.kind == TransformationKind::Weak) {
    for (Elem a = 0; a < x.objects(); ++a)
      if (!is_iso(y.base, c[a])) report.add("invertible", {a});
  }
  return report;
}

DegTransformation identity_deg_transformation(const MonoidalFunctor& f) {
  const FinMonoidalCategory& y = f.target;
  DegTransformation t{f, f, y.unit, {}, TransformationKind::Weak};
  for (Elem a = 0; a < f.source.objects(); ++a) {
    const Elem fa = f.obj(a);
    t.components.push_back(y.c(y.li(fa), y.r(fa)));
  }
  return t;
}

DegTransformation compose_deg_transformations(const DegTransformation& t2,
                                              const DegTransformation& t1) {
  if (!(t1.target == t2.source)) throw PreconditionError("transformations are not composable");
  if (t1.kind != t2.kind) throw PreconditionError("transformations of different kinds");
  const FinMonoidalCategory& y = t1.source.target;
  const Elem al = t1.dist;
  const Elem be = t2.dist;
  DegTransformation out{t1.source, t2.target, y.o(be, al), {}, t1.kind};
  for (Elem a = 0; a < t1.components.size(); ++a) {
    const Elem fa = t1.source.obj(a);
    const Elem ga = t1.target.obj(a);
    const Elem ha = t2.target.obj(a);
    if (t1.kind == TransformationKind::Oplax) {
      out.components.push_back(y.c({y.a(ha, be, al), y.t(t2.components[a], y.id(al)),
                                    y.ai(be, ga, al), y.t(y.id(be), t1.components[a]),
                                    y.a(be, al, fa)}));
    } else {
      out.components.push_back(y.c({y.ai(be, al, fa), y.t(y.id(be), t1.components[a]),
                                    y.a(be, ga, al), y.t(t2.components[a], y.id(al)),
                                    y.ai(ha, be, al)}));
    }
  }
  return out;
}

ValidationReport check_deg_modification(const DegModification& m) {
  const DegTransformation& t = m.source;
  const DegTransformation& s = m.target;
  if (!(t.source == s.source) || !(t.target == s.target) || t.kind != s.kind) {
    throw StructuralError("modification between non-parallel transformations");
  }
  const FinMonoidalCategory& y = t.source.target;
  if (m.gamma >= y.morphisms()) throw StructuralError("gamma out of range", "/gamma");
  ValidationReport report;
  report.merge(check_deg_transformation(t), "source");
  report.merge(check_deg_transformation(s), "target");
  if (!report.ok()) return report;
  if (!has_boundary(y.base, m.gamma, t.dist, s.dist)) {
    report.add("gamma_boundary", {m.gamma});
    return report;
  }
  const bool oplax = t.kind == TransformationKind::Oplax;
  for (Elem a = 0; a < t.components.size(); ++a) {
    const Elem fa = t.source.obj(a);
    const Elem ga = t.target.obj(a);
    const Elem lhs = oplax ? y.c(y.t(y.id(ga), m.gamma), t.components[a])
                           : y.c(s.components[a], y.t(y.id(ga), m.gamma));
    const Elem rhs = oplax ? y.c(s.components[a], y.t(m.gamma, y.id(fa)))
                           : y.c(y.t(m.gamma, y.id(fa)), t.components[a]);
    if (lhs != rhs) report.add("square", {a});
  }
  return report;
}

DegTransformation embed_monoidal_transformation(const MonoidalTransformation& theta) {
  auto report = check_monoidal_transformation(theta);
  if (!report.ok()) throw InvalidInput("not a monoidal transformation", report);
  const FinMonoidalCategory& y = theta.source.target;
  DegTransformation t{theta.source, theta.target, y.unit, {}, TransformationKind::Oplax};
  for (Elem a = 0; a < theta.components.size(); ++a) {
    t.components.push_back(
        y.c({y.ri(theta.target.obj(a)), theta.components[a], y.l(theta.source.obj(a))}));
  }
  return t;
}

std::optional<std::pair<Elem, Elem>> find_object_isomorphism(const FinMonoidalCategory& m,
                                                             Elem a, Elem b) {
  return find_isomorphism(m.base, a, b);
}

std::optional<ClosureFailure> find_unit_closure_failure(const FinMonoidalCategory& m) {
  DegTransformation e =
      embed_monoidal_transformation(identity_monoidal_transformation(identity_monoidal_functor(m)));
  DegTransformation composite = compose_deg_transformations(e, e);
  if (composite.dist == m.unit) return std::nullopt;
  return ClosureFailure{e, e, std::move(composite)};
}

EmbedComparison compare_embed_composite(const MonoidalTransformation& t2,
                                        const MonoidalTransformation& t1) {
  EmbedComparison out{embed_monoidal_transformation(compose_monoidal_transformations(t2, t1)),
                      compose_deg_transformations(embed_monoidal_transformation(t2),
                                                  embed_monoidal_transformation(t1)),
                      false, false};
  out.same_dist = out.of_composite.dist == out.composite_of_images.dist;
  out.same_components = out.of_composite.components == out.composite_of_images.components;
  return out;
}

}  // namespace deglab
