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

#include "deglab/finite_category.hpp"

#include <iterator>

namespace deglab {

Elem FiniteCategory::c(Elem g, Elem f) const {
  if (morphisms[f].tgt != morphisms[g].src) {
    throw StructuralError("composite of non-composable morphisms " + std::to_string(g) +
                          " ∘ " + std::to_string(f));
  }
  Elem gf = comp[g][f];
  if (gf == kUndefined) {
    throw StructuralError("composition table has no entry",
                          "/comp/" + std::to_string(g) + "/" + std::to_string(f));
  }
  return gf;
}

Elem FiniteCategory::c(std::initializer_list<Elem> chain) const {
  auto it = std::rbegin(chain);
  Elem acc = *it;
  for (++it; it != std::rend(chain); ++it) acc = c(*it, acc);
  return acc;
}

std::vector<Elem> FiniteCategory::hom(Elem a, Elem b) const {
  std::vector<Elem> out;
  for (Elem f = 0; f < morphisms.size(); ++f)
    if (morphisms[f].src == a && morphisms[f].tgt == b) out.push_back(f);
  return out;
}

void check_category_shape(const FiniteCategory& c) {
  const std::size_t m = c.morphisms.size();
  if (c.objects == 0) throw StructuralError("category has no objects", "/objects");
  for (Elem f = 0; f < m; ++f) {
    if (c.morphisms[f].src >= c.objects || c.morphisms[f].tgt >= c.objects) {
      throw StructuralError("morphism endpoint out of range", "/morphisms/" + std::to_string(f));
    }
  }
  if (c.identities.size() != c.objects) {
    throw StructuralError("need one identity per object", "/identities");
  }
  for (Elem a = 0; a < c.objects; ++a) {
    if (c.identities[a] >= m) {
      throw StructuralError("identity out of range", "/identities/" + std::to_string(a));
    }
  }
  if (c.comp.size() != m) throw StructuralError("composition table has wrong size", "/comp");
  for (Elem g = 0; g < m; ++g) {
    if (c.comp[g].size() != m) {
      throw StructuralError("composition row has wrong size", "/comp/" + std::to_string(g));
    }
    for (Elem f = 0; f < m; ++f) {
      if (c.comp[g][f] != kUndefined && c.comp[g][f] >= m) {
        throw StructuralError("composite out of range",
                              "/comp/" + std::to_string(g) + "/" + std::to_string(f));
      }
    }
  }
}

ValidationReport check_category(const FiniteCategory& c) {
  check_category_shape(c);
  ValidationReport report;
  const std::size_t m = c.morphisms.size();
  for (Elem a = 0; a < c.objects; ++a) {
    const CellBoundary& b = c.morphisms[c.identities[a]];
    if (b.src != a || b.tgt != a) report.add("identity_boundary", {a});
  }
  for (Elem g = 0; g < m; ++g)
    for (Elem f = 0; f < m; ++f) {
      const bool composable = c.tgt(f) == c.src(g);
      const Elem gf = c.comp[g][f];
      if (composable && gf == kUndefined) {
        report.add("composition_defined", {g, f});
      } else if (!composable && gf != kUndefined) {
        report.add("composition_defined", {g, f}, "defined on a non-composable pair");
      } else if (composable && (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g))) {
        report.add("composition_boundary", {g, f});
      }
    }
  if (!report.ok()) return report;
  for (Elem f = 0; f < m; ++f) {
    if (c.comp[f][c.id(c.src(f))] != f) report.add("right_identity", {f});
    if (c.comp[c.id(c.tgt(f))][f] != f) report.add("left_identity", {f});
  }
  for (Elem f = 0; f < m; ++f)
    for (Elem g = 0; g < m; ++g) {
      if (c.tgt(f) != c.src(g)) continue;
      for (Elem h = 0; h < m; ++h) {
        if (c.tgt(g) != c.src(h)) continue;
        if (c.comp[h][c.comp[g][f]] != c.comp[c.comp[h][g]][f]) report.add("associativity", {h, g, f});
      }
    }
  return report;
}

std::optional<Elem> inverse_morphism(const FiniteCategory& c, Elem f) {
  for (Elem g : c.hom(c.tgt(f), c.src(f))) {
    if (c.c(g, f) == c.id(c.src(f)) && c.c(f, g) == c.id(c.tgt(f))) return g;
  }
  return std::nullopt;
}

std::optional<std::pair<Elem, Elem>> find_isomorphism(const FiniteCategory& c, Elem a, Elem b) {
  for (Elem f : c.hom(a, b)) {
    if (auto g = inverse_morphism(c, f)) return std::make_pair(f, *g);
  }
  return std::nullopt;
}

FiniteCategory terminal_category() { return discrete_category(1); }

FiniteCategory discrete_category(std::size_t n) {
  FiniteCategory c;
  c.objects = n;
  c.comp.assign(n, std::vector<Elem>(n, kUndefined));
  for (Elem a = 0; a < n; ++a) {
    c.morphisms.push_back({a, a});
    c.identities.push_back(a);
    c.comp[a][a] = a;
  }
  return c;
}

FiniteCategory indiscrete_category(std::size_t n) {
  FiniteCategory c;
  c.objects = n;
  const std::size_t m = n * n;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) c.morphisms.push_back({a, b});
  for (Elem a = 0; a < n; ++a) c.identities.push_back(a * n + a);
  c.comp.assign(m, std::vector<Elem>(m, kUndefined));
  for (Elem f = 0; f < m; ++f)
    for (Elem g = 0; g < m; ++g)
      if (c.morphisms[f].tgt == c.morphisms[g].src) {
        c.comp[g][f] = c.morphisms[f].src * n + c.morphisms[g].tgt;
      }
  return c;
}

FiniteCategory arrow_category() {
  FiniteCategory c;
  c.objects = 2;
  c.morphisms = {{0, 0}, {1, 1}, {0, 1}};
  c.identities = {0, 1};
  c.comp.assign(3, std::vector<Elem>(3, kUndefined));
  c.comp[0][0] = 0;
  c.comp[1][1] = 1;
  c.comp[2][0] = 2;
  c.comp[1][2] = 2;
  return c;
}

FiniteCategory one_object_category(const std::vector<std::vector<Elem>>& table, Elem unit) {
  FiniteCategory c;
  c.objects = 1;
  c.morphisms.assign(table.size(), {0, 0});
  c.identities = {unit};
  c.comp = table;
  return c;
}

// ---------------------------------------------------------------------------
// Functors

void check_functor_shape(const FinFunctor& f) {
  check_category_shape(f.source);
  check_category_shape(f.target);
  if (f.on_objects.size() != f.source.objects) {
    throw StructuralError("object map has wrong length", "/on_objects");
  }
  if (f.on_morphisms.size() != f.source.morphism_count()) {
    throw StructuralError("morphism map has wrong length", "/on_morphisms");
  }
  for (Elem a = 0; a < f.on_objects.size(); ++a) {
    if (f.on_objects[a] >= f.target.objects) {
      throw StructuralError("object image out of range", "/on_objects/" + std::to_string(a));
    }
  }
  for (Elem x = 0; x < f.on_morphisms.size(); ++x) {
    if (f.on_morphisms[x] >= f.target.morphism_count()) {
      throw StructuralError("morphism image out of range", "/on_morphisms/" + std::to_string(x));
    }
  }
}

ValidationReport check_functor(const FinFunctor& f) {
  check_functor_shape(f);
  ValidationReport report;
  const FiniteCategory& s = f.source;
  const FiniteCategory& t = f.target;
  for (Elem x = 0; x < s.morphism_count(); ++x) {
    if (t.src(f(x)) != f.obj(s.src(x)) || t.tgt(f(x)) != f.obj(s.tgt(x))) {
      report.add("preserves_boundary", {x});
    }
  }
  if (!report.ok()) return report;
  for (Elem a = 0; a < s.objects; ++a)
    if (f(s.id(a)) != t.id(f.obj(a))) report.add("preserves_identity", {a});
  for (Elem g = 0; g < s.morphism_count(); ++g)
    for (Elem x = 0; x < s.morphism_count(); ++x) {
      if (s.tgt(x) != s.src(g)) continue;
      if (f(s.c(g, x)) != t.c(f(g), f(x))) report.add("preserves_composition", {g, x});
    }
  return report;
}

FinFunctor identity_functor(const FiniteCategory& c) {
  FinFunctor f{c, c, {}, {}};
  for (Elem a = 0; a < c.objects; ++a) f.on_objects.push_back(a);
  for (Elem x = 0; x < c.morphism_count(); ++x) f.on_morphisms.push_back(x);
  return f;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (!(f.target == g.source)) throw PreconditionError("functors are not composable");
  FinFunctor out{f.source, g.target, {}, {}};
  for (Elem a : f.on_objects) out.on_objects.push_back(g.obj(a));
  for (Elem x : f.on_morphisms) out.on_morphisms.push_back(g(x));
  return out;
}

namespace {

class FunctorSearch {
 public:
  FunctorSearch(const FiniteCategory& s, const FiniteCategory& t) : s_(s), t_(t) {}

  std::vector<FinFunctor> run() {
    objects_.assign(s_.objects, 0);
    assign_objects(0);
    return std::move(out_);
  }

 private:
  void assign_objects(Elem a) {
    if (a == s_.objects) {
      morphisms_.assign(s_.morphism_count(), kUndefined);
      assign_morphisms(0);
      return;
    }
    for (Elem b = 0; b < t_.objects; ++b) {
      objects_[a] = b;
      assign_objects(a + 1);
    }
  }

  bool consistent(Elem upto) const {
    for (Elem g = 0; g <= upto; ++g)
      for (Elem f = 0; f <= upto; ++f) {
        if (s_.tgt(f) != s_.src(g)) continue;
        Elem gf = s_.comp[g][f];
        if (gf > upto) continue;
        if (morphisms_[gf] != t_.c(morphisms_[g], morphisms_[f])) return false;
      }
    return true;
  }

  void assign_morphisms(Elem x) {
    if (x == s_.morphism_count()) {
      out_.push_back(FinFunctor{s_, t_, objects_, morphisms_});
      return;
    }
    for (Elem y : t_.hom(objects_[s_.src(x)], objects_[s_.tgt(x)])) {
      morphisms_[x] = y;
      bool identity_ok = true;
      for (Elem a = 0; a < s_.objects; ++a)
        if (s_.id(a) == x && y != t_.id(objects_[a])) identity_ok = false;
      if (identity_ok && consistent(x)) assign_morphisms(x + 1);
    }
    morphisms_[x] = kUndefined;
  }

  const FiniteCategory& s_;
  const FiniteCategory& t_;
  std::vector<Elem> objects_;
  std::vector<Elem> morphisms_;
  std::vector<FinFunctor> out_;
};

}  // namespace

std::vector<FinFunctor> enumerate_functors(const FiniteCategory& source,
                                           const FiniteCategory& target) {
  auto s = check_category(source);
  if (!s.ok()) throw InvalidInput("source is not a category", s);
  auto t = check_category(target);
  if (!t.ok()) throw InvalidInput("target is not a category", t);
  return FunctorSearch(source, target).run();
}

// ---------------------------------------------------------------------------
// Natural transformations

ValidationReport check_nat_trans(const FinNatTrans& t) {
  const FinFunctor& f = t.source;
  const FinFunctor& g = t.target;
  if (!(f.source == g.source) || !(f.target == g.target)) {
    throw StructuralError("transformation between non-parallel functors");
  }
  check_functor_shape(f);
  check_functor_shape(g);
  const FiniteCategory& c = f.source;
  const FiniteCategory& d = f.target;
  if (t.components.size() != c.objects) throw StructuralError("need one component per object", "/components");
  for (Elem a = 0; a < c.objects; ++a) {
    if (t.components[a] >= d.morphism_count()) {
      throw StructuralError("component out of range", "/components/" + std::to_string(a));
    }
  }
  ValidationReport report;
  for (Elem a = 0; a < c.objects; ++a) {
    const Elem th = t.components[a];
    if (d.src(th) != f.obj(a) || d.tgt(th) != g.obj(a)) report.add("component_boundary", {a});
  }
  if (!report.ok()) return report;
  for (Elem x = 0; x < c.morphism_count(); ++x) {
    if (d.c(g(x), t.components[c.src(x)]) != d.c(t.components[c.tgt(x)], f(x))) {
      report.add("naturality", {x});
    }
  }
  return report;
}

FinNatTrans identity_nat_trans(const FinFunctor& f) {
  FinNatTrans t{f, f, {}};
  for (Elem a = 0; a < f.source.objects; ++a) t.components.push_back(f.target.id(f.obj(a)));
  return t;
}

FinNatTrans vcompose(const FinNatTrans& t2, const FinNatTrans& t1) {
  if (!(t1.target == t2.source)) throw PreconditionError("transformations are not composable");
  FinNatTrans out{t1.source, t2.target, {}};
  for (Elem a = 0; a < t1.components.size(); ++a) {
    out.components.push_back(t1.source.target.c(t2.components[a], t1.components[a]));
  }
  return out;
}

FinNatTrans whisker_left(const FinFunctor& h, const FinNatTrans& t) {
  FinNatTrans out{compose_functors(h, t.source), compose_functors(h, t.target), {}};
  for (Elem th : t.components) out.components.push_back(h(th));
  return out;
}

FinNatTrans whisker_right(const FinNatTrans& t, const FinFunctor& k) {
  FinNatTrans out{compose_functors(t.source, k), compose_functors(t.target, k), {}};
  for (Elem a = 0; a < k.source.objects; ++a) out.components.push_back(t.components[k.obj(a)]);
  return out;
}

}  // namespace deglab
