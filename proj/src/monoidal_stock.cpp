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

// Stock monoidal categories, the bicategory reading and ξ.

#include <map>
#include <tuple>

#include "deglab/monoidal.hpp"

namespace deglab {

FinMonoidalCategory discrete_cyclic_moncat(std::size_t n) {
  if (n == 0) throw PreconditionError("discrete monoidal category needs at least one object");
  FinMonoidalCategory m;
  m.base = discrete_category(n);
  m.tensor_obj.assign(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) m.tensor_obj[a][b] = (a + b) % n;
  m.tensor_mor = m.tensor_obj;  // morphism a is the identity on object a
  m.unit = 0;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) m.assoc.push_back((a + b + c) % n);
  m.assoc_inv = m.assoc;
  for (Elem a = 0; a < n; ++a) m.lunit.push_back(a);
  m.lunit_inv = m.runit = m.runit_inv = m.lunit;
  return m;
}

FinMonoidalCategory trivial_moncat() { return discrete_cyclic_moncat(1); }

FinMonoidalCategory sign_moncat() {
  FinMonoidalCategory m;
  FiniteCategory& c = m.base;
  c.objects = 2;
  for (Elem x = 0; x < 2; ++x)
    for (Elem s = 0; s < 2; ++s) c.morphisms.push_back({x, x});
  c.identities = {0, 2};
  c.comp.assign(4, std::vector<Elem>(4, kUndefined));
  for (Elem f = 0; f < 4; ++f)
    for (Elem g = 0; g < 4; ++g)
      if (f / 2 == g / 2) c.comp[g][f] = 2 * (f / 2) + ((f % 2) ^ (g % 2));
  m.tensor_obj = {{0, 1}, {1, 0}};
  m.tensor_mor.assign(4, std::vector<Elem>(4));
  for (Elem f = 0; f < 4; ++f)
    for (Elem g = 0; g < 4; ++g) m.tensor_mor[f][g] = 2 * ((f / 2) ^ (g / 2)) + ((f % 2) ^ (g % 2));
  m.unit = 0;
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y)
      for (Elem z = 0; z < 2; ++z) m.assoc.push_back(2 * (x ^ y ^ z) + (x & y & z));
  m.assoc_inv = m.assoc;  // each sign is its own inverse
  m.lunit = {0, 2};
  m.lunit_inv = m.runit = m.runit_inv = m.lunit;
  return m;
}

FinMonoidalCategory flip_moncat() {
  FinMonoidalCategory m;
  m.base = indiscrete_category(2);
  auto mor = [](Elem a, Elem b) { return 2 * a + b; };
  m.tensor_obj = {{1, 0}, {1, 0}};
  m.tensor_mor.assign(4, std::vector<Elem>(4));
  for (Elem f = 0; f < 4; ++f)
    for (Elem g = 0; g < 4; ++g) m.tensor_mor[f][g] = mor(1 - g / 2, 1 - g % 2);
  m.unit = 0;
  for (Elem x = 0; x < 2; ++x)
    for (Elem y = 0; y < 2; ++y)
      for (Elem z = 0; z < 2; ++z) {
        m.assoc.push_back(mor(1 - z, z));
        m.assoc_inv.push_back(mor(z, 1 - z));
      }
  for (Elem x = 0; x < 2; ++x) {
    m.lunit.push_back(mor(1 - x, x));
    m.lunit_inv.push_back(mor(x, 1 - x));
    m.runit.push_back(mor(1, x));
    m.runit_inv.push_back(mor(x, 1));
  }
  return m;
}

std::vector<NamedMoncat> stock_moncats() {
  return {{"trivial", trivial_moncat()},
          {"discrete_z2", discrete_cyclic_moncat(2)},
          {"sign", sign_moncat()},
          {"flip", flip_moncat()}};
}

// ---------------------------------------------------------------------------
// Bicategory reading

FinMonoidalCategory shift_from_bicat(const DegenerateBicategory& b) {
  FinMonoidalCategory m;
  m.base.objects = b.one_cells;
  m.base.morphisms = b.two_cells;
  m.base.identities = b.id2;
  m.base.comp = b.vcomp;
  m.tensor_obj = b.hcomp_1;
  m.tensor_mor = b.hcomp_2;
  m.unit = b.unit_1cell;
  m.assoc = b.assoc;
  m.assoc_inv = b.assoc_inv;
  m.lunit = b.lunit;
  m.lunit_inv = b.lunit_inv;
  m.runit = b.runit;
  m.runit_inv = b.runit_inv;
  return m;
}

DegenerateBicategory shift_to_bicat(const FinMonoidalCategory& m) {
  DegenerateBicategory b;
  b.one_cells = m.base.objects;
  b.two_cells = m.base.morphisms;
  b.id2 = m.base.identities;
  b.vcomp = m.base.comp;
  b.hcomp_1 = m.tensor_obj;
  b.hcomp_2 = m.tensor_mor;
  b.unit_1cell = m.unit;
  b.assoc = m.assoc;
  b.assoc_inv = m.assoc_inv;
  b.lunit = m.lunit;
  b.lunit_inv = m.lunit_inv;
  b.runit = m.runit;
  b.runit_inv = m.runit_inv;
  return b;
}

ValidationReport check_degenerate_bicategory(const DegenerateBicategory& b) {
  ValidationReport report;
  if (b.zero_cell != "∗") report.add("zero_cell_label", {}, "the single 0-cell is labelled ∗");
  report.merge(check_monoidal(shift_from_bicat(b)));
  return report;
}

namespace {

/// The hom-category of the single 0-cell.
FiniteCategory hom_category(const DegenerateBicategory& b) {
  return FiniteCategory{b.one_cells, b.two_cells, b.id2, b.vcomp};
}

// Vertical composite of a chain of 2-cells, last applied first.
Elem vc(const DegenerateBicategory& b, std::initializer_list<Elem> chain) {
  return hom_category(b).c(chain);
}

Elem src2(const DegenerateBicategory& b, Elem x) { return b.two_cells[x].src; }
Elem tgt2(const DegenerateBicategory& b, Elem x) { return b.two_cells[x].tgt; }

Elem at3(const DegenerateBicategory& b, const std::vector<Elem>& v, Elem f, Elem g, Elem h) {
  return v[(f * b.one_cells + g) * b.one_cells + h];
}

bool invertible2(const DegenerateBicategory& b, Elem x) {
  return inverse_morphism(hom_category(b), x).has_value();
}

}  // namespace

ValidationReport check_bicat_functor(const BicatFunctor& f) {
  const DegenerateBicategory& x = f.source;
  const DegenerateBicategory& y = f.target;
  check_monoidal_shape(shift_from_bicat(x));
  check_monoidal_shape(shift_from_bicat(y));
  const std::size_t n = x.one_cells;
  if (f.on_1cells.size() != n || f.on_2cells.size() != x.two_cells.size() ||
      f.comp_constraint.size() != n * n) {
    throw StructuralError("functor data has wrong length");
  }
  for (Elem v : f.on_1cells)
    if (v >= y.one_cells) throw StructuralError("1-cell image out of range", "/on_1cells");
  for (Elem v : f.on_2cells)
    if (v >= y.two_cells.size()) throw StructuralError("2-cell image out of range", "/on_2cells");
  for (Elem v : f.comp_constraint)
    if (v >= y.two_cells.size()) throw StructuralError("constraint out of range", "/comp_constraint");
  if (f.unit_constraint >= y.two_cells.size()) throw StructuralError("constraint out of range", "/unit_constraint");

  ValidationReport report;
  auto F1 = [&](Elem c) { return f.on_1cells[c]; };
  auto F2 = [&](Elem c) { return f.on_2cells[c]; };
  auto phi = [&](Elem p, Elem q) { return f.comp_constraint[p * n + q]; };

  for (Elem c = 0; c < x.two_cells.size(); ++c)
    if (src2(y, F2(c)) != F1(src2(x, c)) || tgt2(y, F2(c)) != F1(tgt2(x, c)))
      report.add("preserves_2cell_boundary", {c});
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q) {
      Elem cell = phi(p, q);
      if (src2(y, cell) != y.hcomp_1[F1(p)][F1(q)] || tgt2(y, cell) != F1(x.hcomp_1[p][q]))
        report.add("comp_constraint_boundary", {p, q});
    }
  if (src2(y, f.unit_constraint) != y.unit_1cell || tgt2(y, f.unit_constraint) != F1(x.unit_1cell))
    report.add("unit_constraint_boundary", {});
  if (!report.ok()) return report;

  for (Elem p = 0; p < n; ++p)
    if (F2(x.id2[p]) != y.id2[F1(p)]) report.add("preserves_identity_2cells", {p});
  for (Elem s = 0; s < x.two_cells.size(); ++s)
    for (Elem t = 0; t < x.two_cells.size(); ++t) {
      if (tgt2(x, t) != src2(x, s)) continue;
      if (F2(x.vcomp[s][t]) != y.vcomp[F2(s)][F2(t)]) report.add("preserves_vertical_composition", {s, t});
    }
  if (!report.ok()) return report;

  for (Elem s = 0; s < x.two_cells.size(); ++s)
    for (Elem t = 0; t < x.two_cells.size(); ++t) {
      Elem lhs = vc(y, {phi(tgt2(x, s), tgt2(x, t)), y.hcomp_2[F2(s)][F2(t)]});
      Elem rhs = vc(y, {F2(x.hcomp_2[s][t]), phi(src2(x, s), src2(x, t))});
      if (lhs != rhs) report.add("comp_constraint_naturality", {s, t});
    }
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q)
      for (Elem r = 0; r < n; ++r) {
        Elem lhs = vc(y, {F2(at3(x, x.assoc, p, q, r)), phi(x.hcomp_1[p][q], r),
                          y.hcomp_2[phi(p, q)][y.id2[F1(r)]]});
        Elem rhs = vc(y, {phi(p, x.hcomp_1[q][r]), y.hcomp_2[y.id2[F1(p)]][phi(q, r)],
                          at3(y, y.assoc, F1(p), F1(q), F1(r))});
        if (lhs != rhs) report.add("associativity", {p, q, r});
      }
  for (Elem p = 0; p < n; ++p) {
    Elem left = vc(y, {F2(x.lunit[p]), phi(x.unit_1cell, p), y.hcomp_2[f.unit_constraint][y.id2[F1(p)]]});
    if (left != y.lunit[F1(p)]) report.add("left_unit", {p});
    Elem right = vc(y, {F2(x.runit[p]), phi(p, x.unit_1cell), y.hcomp_2[y.id2[F1(p)]][f.unit_constraint]});
    if (right != y.runit[F1(p)]) report.add("right_unit", {p});
  }
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q)
      if (!invertible2(y, phi(p, q))) report.add("constraints_invertible", {p, q});
  if (!invertible2(y, f.unit_constraint)) report.add("constraints_invertible", {}, "unit");
  return report;
}

std::vector<BicatFunctor> enumerate_bicat_functors(const DegenerateBicategory& source,
                                                   const DegenerateBicategory& target) {
  const std::size_t n = source.one_cells;
  std::vector<BicatFunctor> out;
  for (const FinFunctor& local : enumerate_functors(hom_category(source), hom_category(target))) {
    std::vector<std::vector<Elem>> choices;
    auto cells_between = [&](Elem s, Elem t) {
      std::vector<Elem> v;
      for (Elem c = 0; c < target.two_cells.size(); ++c)
        if (src2(target, c) == s && tgt2(target, c) == t) v.push_back(c);
      return v;
    };
    for (Elem p = 0; p < n; ++p)
      for (Elem q = 0; q < n; ++q)
        choices.push_back(cells_between(target.hcomp_1[local.obj(p)][local.obj(q)],
                                        local.obj(source.hcomp_1[p][q])));
    choices.push_back(cells_between(target.unit_1cell, local.obj(source.unit_1cell)));
    bool empty = false;
    for (const auto& c : choices) empty = empty || c.empty();
    if (empty) continue;
    std::vector<std::size_t> pos(choices.size(), 0);
    while (true) {
      BicatFunctor f{source, target, local.on_objects, local.on_morphisms, {}, 0};
      for (std::size_t i = 0; i + 1 < choices.size(); ++i) f.comp_constraint.push_back(choices[i][pos[i]]);
      f.unit_constraint = choices.back()[pos.back()];
      if (check_bicat_functor(f).ok()) out.push_back(std::move(f));
      std::size_t i = 0;
      while (i < pos.size() && ++pos[i] == choices[i].size()) pos[i++] = 0;
      if (i == pos.size()) break;
    }
  }
  return out;
}

MonoidalFunctor xi(const BicatFunctor& f) {
  return MonoidalFunctor{shift_from_bicat(f.source), shift_from_bicat(f.target), f.on_1cells,
                         f.on_2cells, f.comp_constraint, f.unit_constraint};
}

namespace {

BicatFunctor compose_bicat_functors(const BicatFunctor& g, const BicatFunctor& f) {
  const DegenerateBicategory& z = g.target;
  const std::size_t n = f.source.one_cells;
  BicatFunctor out{f.source, z, {}, {}, {}, 0};
  for (Elem p : f.on_1cells) out.on_1cells.push_back(g.on_1cells[p]);
  for (Elem c : f.on_2cells) out.on_2cells.push_back(g.on_2cells[c]);
  const std::size_t m = g.source.one_cells;
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q) {
      Elem inner = g.comp_constraint[f.on_1cells[p] * m + f.on_1cells[q]];
      out.comp_constraint.push_back(vc(z, {g.on_2cells[f.comp_constraint[p * n + q]], inner}));
    }
  out.unit_constraint = vc(z, {g.on_2cells[f.unit_constraint], g.unit_constraint});
  return out;
}

using CellKey = std::tuple<Elem, Elem, std::vector<Elem>>;

std::vector<Elem> signature(const BicatFunctor& f) {
  std::vector<Elem> s = f.on_1cells;
  s.insert(s.end(), f.on_2cells.begin(), f.on_2cells.end());
  s.insert(s.end(), f.comp_constraint.begin(), f.comp_constraint.end());
  s.push_back(f.unit_constraint);
  return s;
}

std::vector<Elem> signature(const MonoidalFunctor& f) {
  std::vector<Elem> s = f.on_objects;
  s.insert(s.end(), f.on_morphisms.begin(), f.on_morphisms.end());
  s.insert(s.end(), f.phi.begin(), f.phi.end());
  s.push_back(f.phi0);
  return s;
}

/// Finite 1-category on the given objects and 1-cells; composition by
/// `compose` and lookup of the result.
template <typename Cell, typename Composer>
std::shared_ptr<const FiniteJCategory> make_universe(const std::vector<std::string>& labels,
                                                     const std::vector<CellBoundary>& bounds,
                                                     const std::vector<Cell>& cells,
                                                     const std::vector<Cell>& identities,
                                                     Composer compose) {
  auto index = std::make_shared<std::map<CellKey, Elem>>();
  for (Elem c = 0; c < cells.size(); ++c)
    index->emplace(CellKey{bounds[c].src, bounds[c].tgt, signature(cells[c])}, c);
  std::vector<Elem> id1;
  for (Elem a = 0; a < identities.size(); ++a) id1.push_back(index->at({a, a, signature(identities[a])}));
  auto shared_cells = std::make_shared<std::vector<Cell>>(cells);
  auto shared_bounds = std::make_shared<std::vector<CellBoundary>>(bounds);
  return std::make_shared<const FiniteJCategory>(
      1, labels, bounds, std::vector<CellBoundary>{}, std::move(id1), std::vector<Elem>{},
      [index, shared_cells, shared_bounds, compose](int, Elem g, Elem f) -> Elem {
        const CellBoundary& bf = (*shared_bounds)[f];
        const CellBoundary& bg = (*shared_bounds)[g];
        if (bf.tgt != bg.src) return kUndefined;
        auto it = index->find(
            {bf.src, bg.tgt, signature(compose((*shared_cells)[g], (*shared_cells)[f]))});
        return it == index->end() ? kUndefined : it->second;
      });
}

}  // namespace

EquivalenceReport check_xi_equivalence(std::size_t bound) {
  std::vector<NamedMoncat> stock;
  for (auto& s : stock_moncats())
    if (s.category.objects() <= bound) stock.push_back(std::move(s));
  EquivalenceReport report;
  report.functor = "xi";
  report.bound = bound;
  if (stock.empty()) throw PreconditionError("no stock monoidal category within the bound");

  std::vector<std::string> labels;
  std::vector<DegenerateBicategory> bicats;
  std::vector<MonoidalFunctor> identity_mon;
  std::vector<BicatFunctor> identity_bicat;
  for (const auto& s : stock) {
    labels.push_back(s.name);
    bicats.push_back(shift_to_bicat(s.category));
    identity_mon.push_back(identity_monoidal_functor(s.category));
  }

  std::vector<BicatFunctor> source_cells;
  std::vector<CellBoundary> source_bounds;
  std::vector<MonoidalFunctor> target_cells;
  std::vector<CellBoundary> target_bounds;
  CriterionResult full{"full", 1, true, {}, nullptr};
  CriterionResult faithful{"faithful", 1, true, {}, nullptr};
  CriterionResult total{"projection_total", 1, true, {}, nullptr};
  std::vector<Elem> cell_map;
  for (Elem i = 0; i < stock.size(); ++i)
    for (Elem k = 0; k < stock.size(); ++k) {
      auto left = enumerate_bicat_functors(bicats[i], bicats[k]);
      auto right = enumerate_monoidal_functors(stock[i].category, stock[k].category);
      const Elem right_base = target_cells.size();
      for (auto& g : right) {
        target_cells.push_back(g);
        target_bounds.push_back({i, k});
      }
      std::vector<bool> hit(right.size(), false);
      for (auto& f : left) {
        MonoidalFunctor image = xi(f);
        Elem found = kUndefined;
        for (Elem r = 0; r < right.size(); ++r)
          if (right[r] == image) found = r;
        if (found == kUndefined) {
          if (total.passed) {
            total.passed = false;
            total.detail = "a bicategory functor " + labels[i] + " -> " + labels[k] +
                           " is not sent to a monoidal functor";
          }
          cell_map.push_back(kUndefined);
        } else {
          if (hit[found] && faithful.passed) {
            faithful.passed = false;
            faithful.detail = "two functors " + labels[i] + " -> " + labels[k] + " share an image";
            faithful.witness = {{"source", i}, {"target", k}, {"image", found}};
          }
          hit[found] = true;
          cell_map.push_back(right_base + found);
        }
        source_cells.push_back(std::move(f));
        source_bounds.push_back({i, k});
      }
      for (Elem r = 0; r < right.size(); ++r) {
        if (!hit[r] && full.passed) {
          full.passed = false;
          full.detail = "monoidal functor " + labels[i] + " -> " + labels[k] + " has no preimage";
          full.witness = {{"source", i}, {"target", k}, {"functor", r}};
        }
      }
    }
  report.add(total);
  report.add(full);
  report.add(faithful);
  CriterionResult round_trip{"shift_round_trip", 0, true, {}, nullptr};
  for (Elem i = 0; i < stock.size(); ++i) {
    if (!(shift_from_bicat(bicats[i]) == stock[i].category) ||
        !(shift_to_bicat(shift_from_bicat(bicats[i])) == bicats[i])) {
      round_trip.passed = false;
      round_trip.detail = labels[i];
    }
  }
  report.add(round_trip);
  if (!total.passed) return report;

  for (Elem i = 0; i < stock.size(); ++i) {
    for (const auto& f : source_cells)
      if (f.source == bicats[i] && f.target == bicats[i] && xi(f) == identity_mon[i]) {
        identity_bicat.push_back(f);
        break;
      }
  }
  if (identity_bicat.size() != stock.size()) {
    report.add({"identities_present", 1, false, "an identity functor is missing", nullptr});
    return report;
  }

  auto source = make_universe(labels, source_bounds, source_cells, identity_bicat,
                              [](const BicatFunctor& g, const BicatFunctor& f) {
                                return compose_bicat_functors(g, f);
                              });
  auto target = make_universe(labels, target_bounds, target_cells, identity_mon,
                              [](const MonoidalFunctor& g, const MonoidalFunctor& f) {
                                return compose_monoidal_functors(g, f);
                              });
  std::vector<Elem> objects;
  for (Elem i = 0; i < stock.size(); ++i) objects.push_back(i);
  JFunctor xi_f{source, target, {objects, cell_map}, "xi"};
  auto functoriality = check_jfunctor(xi_f);
  report.add({"functorial", 1, functoriality.ok(), functoriality.summary(), nullptr});
  report.add(surjective_on_objects(xi_f));
  ClassicalVerdict classical = classical_equivalence(xi_f);
  report.add({"classical_equivalence", 1, classical.equivalence(), {}, nullptr});
  for (auto& c : check_external_equivalence(xi_f).criteria) report.add(std::move(c));
  return report;
}

}  // namespace deglab
