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

// Finite truncations of the 2-category of doubly degenerate bicategories and
// of the discrete 2-category of commutative monoids, and the comparison ξ.

#include <algorithm>
#include <map>
#include <tuple>

#include "deglab/doubly_degenerate.hpp"

namespace deglab {

namespace {

using FunctorKey = std::tuple<Elem, Elem, std::vector<Elem>, Elem>;
using HomKey = std::tuple<Elem, Elem, std::vector<Elem>>;

std::string order_label(const char* prefix, std::size_t i, const FiniteMonoid& m) {
  return prefix + std::to_string(i) + "[order " + std::to_string(m.size()) + "]";
}

// Shared state captured by the composition closures.
struct DDIndex {
  std::vector<CMonDIE> objects;
  std::vector<DDFunctor> one_cells;
  std::vector<CellBoundary> one_bounds;
  std::map<FunctorKey, Elem> functor_index;
  std::vector<DDTransformation> two_cells;
  std::vector<CellBoundary> two_bounds;
  std::map<std::pair<Elem, Elem>, Elem> transformation_index;

  Elem lookup(Elem src, Elem tgt, const DDFunctor& f) const {
    auto it = functor_index.find({src, tgt, f.map, f.m2});
    return it == functor_index.end() ? kUndefined : it->second;
  }
};

}  // namespace

DDUniverse build_dd_universe(std::size_t bound, int j, bool identity_constraint_only) {
  if (j < 1 || j > 2) throw PreconditionError("DD universes are built for j = 1 or 2");
  auto idx = std::make_shared<DDIndex>();
  idx->objects = enumerate_cmon_dies(bound);

  for (Elem a = 0; a < idx->objects.size(); ++a)
    for (Elem b = 0; b < idx->objects.size(); ++b) {
      const CMonDIE& x = idx->objects[a];
      const CMonDIE& y = idx->objects[b];
      std::vector<Elem> constraints = identity_constraint_only
                                          ? std::vector<Elem>{y.monoid.unit()}
                                          : invertible_elements(y.monoid);
      for (auto& h : enumerate_homs(x.monoid, y.monoid)) {
        for (Elem m : constraints) {
          Elem id = idx->one_cells.size();
          idx->one_cells.push_back(make_dd_functor(x, y, h.map, m));
          idx->one_bounds.push_back({a, b});
          idx->functor_index.emplace(FunctorKey{a, b, h.map, m}, id);
        }
      }
    }

  std::vector<Elem> id1(idx->objects.size());
  for (Elem a = 0; a < idx->objects.size(); ++a) {
    id1[a] = idx->lookup(a, a, identity_dd_functor(idx->objects[a]));
    if (id1[a] == kUndefined) throw RefutationAlarm("identity functor missing from universe");
  }

  std::vector<Elem> id2;
  if (j == 2) {
    for (Elem f = 0; f < idx->one_cells.size(); ++f)
      for (Elem g = 0; g < idx->one_cells.size(); ++g) {
        if (!(idx->one_bounds[f] == idx->one_bounds[g])) continue;
        auto t = transformation_between(idx->one_cells[f], idx->one_cells[g]);
        if (!t) continue;
        idx->transformation_index.emplace(std::make_pair(f, g), idx->two_cells.size());
        idx->two_cells.push_back(*t);
        idx->two_bounds.push_back({f, g});
      }
    id2.resize(idx->one_cells.size());
    for (Elem f = 0; f < idx->one_cells.size(); ++f) id2[f] = idx->transformation_index.at({f, f});
  }

  std::vector<std::string> labels;
  for (Elem a = 0; a < idx->objects.size(); ++a) {
    labels.push_back(order_label("X", a, idx->objects[a].monoid) + "/d=" +
                     std::to_string(idx->objects[a].die));
  }

  std::shared_ptr<const DDIndex> state = idx;
  auto compose = [state](int dim, Elem g, Elem f) -> Elem {
    if (dim == 1) {
      const CellBoundary& bf = state->one_bounds[f];
      const CellBoundary& bg = state->one_bounds[g];
      if (bf.tgt != bg.src) return kUndefined;
      return state->lookup(bf.src, bg.tgt,
                           compose_dd_functors(state->one_cells[g], state->one_cells[f]));
    }
    const CellBoundary& bf = state->two_bounds[f];
    const CellBoundary& bg = state->two_bounds[g];
    if (bf.tgt != bg.src) return kUndefined;
    auto it = state->transformation_index.find({bf.src, bg.tgt});
    if (it == state->transformation_index.end()) return kUndefined;
    DDTransformation c = compose_dd_transformations(state->two_cells[g], state->two_cells[f]);
    return c == state->two_cells[it->second] ? it->second : kUndefined;
  };
  FiniteJCategory::HCompose hcompose;
  if (j == 2) {
    hcompose = [state](Elem beta, Elem alpha) -> Elem {
      DDTransformation c =
          hcompose_dd_transformations(state->two_cells[beta], state->two_cells[alpha]);
      Elem f = state->lookup(state->one_bounds[state->two_bounds[alpha].src].src,
                             state->one_bounds[state->two_bounds[beta].src].tgt, c.source);
      Elem g = state->lookup(state->one_bounds[state->two_bounds[alpha].tgt].src,
                             state->one_bounds[state->two_bounds[beta].tgt].tgt, c.target);
      auto it = state->transformation_index.find({f, g});
      return it == state->transformation_index.end() ? kUndefined : it->second;
    };
  }

  DDUniverse out;
  out.objects = idx->objects;
  out.one_cells = idx->one_cells;
  out.two_cells = idx->two_cells;
  out.category = std::make_shared<const FiniteJCategory>(
      j, std::move(labels), idx->one_bounds, idx->two_bounds, std::move(id1), std::move(id2),
      compose, hcompose);
  return out;
}

CMonUniverse build_cmon_universe(std::size_t bound, int j) {
  if (j < 1 || j > 2) throw PreconditionError("CMon universes are built for j = 1 or 2");
  CMonUniverse out;
  for (std::size_t n = 1; n <= bound; ++n)
    for (auto& m : enumerate_monoids(n, true)) out.objects.push_back(std::move(m));

  auto index = std::make_shared<std::map<HomKey, Elem>>();
  std::vector<CellBoundary> bounds;
  for (Elem a = 0; a < out.objects.size(); ++a)
    for (Elem b = 0; b < out.objects.size(); ++b)
      for (auto& h : enumerate_homs(out.objects[a], out.objects[b])) {
        index->emplace(HomKey{a, b, h.map}, out.one_cells.size());
        out.one_cells.push_back(std::move(h));
        bounds.push_back({a, b});
      }

  std::vector<Elem> id1(out.objects.size());
  for (Elem a = 0; a < out.objects.size(); ++a)
    id1[a] = index->at({a, a, identity_hom(out.objects[a]).map});

  // Discrete above dimension 1: the only 2-cells are identities, numbered
  // like the 1-cells they sit on.
  std::vector<CellBoundary> two_bounds;
  std::vector<Elem> id2;
  if (j == 2) {
    for (Elem f = 0; f < out.one_cells.size(); ++f) {
      two_bounds.push_back({f, f});
      id2.push_back(f);
    }
  }

  std::vector<std::string> labels;
  for (Elem a = 0; a < out.objects.size(); ++a) labels.push_back(order_label("M", a, out.objects[a]));

  auto cells = std::make_shared<std::vector<MonoidHom>>(out.one_cells);
  auto shared_bounds = std::make_shared<std::vector<CellBoundary>>(bounds);
  auto compose_fn = [index, cells, shared_bounds](int dim, Elem g, Elem f) -> Elem {
    if (dim == 2) return g == f ? f : kUndefined;
    const CellBoundary& bf = (*shared_bounds)[f];
    const CellBoundary& bg = (*shared_bounds)[g];
    if (bf.tgt != bg.src) return kUndefined;
    auto it = index->find({bf.src, bg.tgt, compose((*cells)[g], (*cells)[f]).map});
    return it == index->end() ? kUndefined : it->second;
  };
  FiniteJCategory::HCompose hcompose;
  if (j == 2) {
    hcompose = [compose_fn](Elem beta, Elem alpha) { return compose_fn(1, beta, alpha); };
  }
  out.category = std::make_shared<const FiniteJCategory>(
      j, std::move(labels), std::move(bounds), std::move(two_bounds), std::move(id1),
      std::move(id2), compose_fn, hcompose);
  return out;
}

JFunctor xi_functor(const DDUniverse& source, const CMonUniverse& target) {
  const int j = source.category->j();
  if (target.category->j() != j) throw PreconditionError("ξ needs universes of equal dimension");
  JFunctor f{source.category, target.category, std::vector<std::vector<Elem>>(j + 1), "xi_" + std::to_string(j)};
  std::map<FiniteMonoid, Elem> objects;
  for (Elem a = 0; a < target.objects.size(); ++a) objects.emplace(target.objects[a], a);
  std::map<HomKey, Elem> homs;
  for (Elem c = 0; c < target.one_cells.size(); ++c) {
    const CellBoundary& b = target.category->boundary(1, c);
    homs.emplace(HomKey{b.src, b.tgt, target.one_cells[c].map}, c);
  }
  for (const auto& x : source.objects) {
    auto it = objects.find(xi(x));
    if (it == objects.end()) throw RefutationAlarm("ξ sends an object outside the universe");
    f.maps[0].push_back(it->second);
  }
  for (Elem c = 0; c < source.one_cells.size(); ++c) {
    const CellBoundary& b = source.category->boundary(1, c);
    auto it = homs.find({f.maps[0][b.src], f.maps[0][b.tgt], xi(source.one_cells[c]).map});
    if (it == homs.end()) throw RefutationAlarm("ξ sends a functor outside the universe");
    f.maps[1].push_back(it->second);
  }
  if (j == 2) {
    // Every 2-cell goes to the identity on the image of its source.
    for (Elem c = 0; c < source.two_cells.size(); ++c) {
      f.maps[2].push_back(target.category->identity(1, f.maps[1][source.category->boundary(2, c).src]));
    }
  }
  return f;
}

namespace {

void add_functoriality(EquivalenceReport& report, const JFunctor& f) {
  auto functoriality = check_jfunctor(f);
  CriterionResult r{"functorial", f.source->j(), functoriality.ok(), functoriality.summary(), nullptr};
  if (!r.passed) r.witness = functoriality.to_json();
  report.add(std::move(r));
}

/// Every target 0-cell is hit by an object whose distinguished element is the unit.
CriterionResult surjective_via_unit_die(const JFunctor& f, const DDUniverse& source) {
  CriterionResult r{"surjective_on_objects_unit_die", 0, true, {}, nullptr};
  std::vector<bool> hit(f.target->count(0), false);
  for (Elem a = 0; a < source.objects.size(); ++a)
    if (source.objects[a].die == source.objects[a].monoid.unit()) hit[f.maps[0][a]] = true;
  for (Elem y = 0; y < hit.size(); ++y) {
    if (!hit[y]) {
      r.passed = false;
      r.detail = "no (X, 1) over " + f.target->label(y);
      r.witness = {{"object", y}};
      break;
    }
  }
  return r;
}

/// For all source 0-cells a, b: the map hom(a,b) -> hom(ξa, ξb) is surjective.
CriterionResult locally_surjective_1(const JFunctor& f) {
  CriterionResult r{"locally_surjective", 1, true, {}, nullptr};
  const auto& s = *f.source;
  const auto& t = *f.target;
  for (Elem a = 0; a < s.count(0); ++a)
    for (Elem b = 0; b < s.count(0); ++b) {
      std::vector<bool> hit(t.count(1), false);
      for (Elem c : s.hom(1, a, b)) hit[f.maps[1][c]] = true;
      for (Elem c : t.hom(1, f.maps[0][a], f.maps[0][b])) {
        if (!hit[c]) {
          r.passed = false;
          r.detail = "hom " + t.label(f.maps[0][a]) + " -> " + t.label(f.maps[0][b]) +
                     " misses a 1-cell";
          r.witness = {{"source", a}, {"target", b}, {"missed", c}};
          return r;
        }
      }
    }
  return r;
}

/// For all parallel source 1-cells f, g: hom(f,g) -> hom(ξf, ξg) is a bijection.
CriterionResult locally_bijective_2(const JFunctor& f) {
  CriterionResult r{"locally_bijective", 2, true, {}, nullptr};
  const auto& s = *f.source;
  const auto& t = *f.target;
  for (Elem a = 0; a < s.count(0); ++a)
    for (Elem b = 0; b < s.count(0); ++b) {
      const auto& cells = s.hom(1, a, b);
      for (Elem p : cells)
        for (Elem q : cells) {
          const auto& left = s.hom(2, p, q);
          const auto& right = t.hom(2, f.maps[1][p], f.maps[1][q]);
          std::vector<Elem> images;
          for (Elem c : left) images.push_back(f.maps[2][c]);
          std::sort(images.begin(), images.end());
          std::vector<Elem> expected(right.begin(), right.end());
          std::sort(expected.begin(), expected.end());
          if (images != expected) {
            r.passed = false;
            r.detail = "2-cells over a parallel pair of functors are not in bijection";
            r.witness = {{"first", p}, {"second", q}, {"source_cells", left.size()},
                         {"target_cells", right.size()}};
            return r;
          }
        }
    }
  return r;
}

}  // namespace

EquivalenceReport check_xi2_equivalence(std::size_t bound) {
  DDUniverse source = build_dd_universe(bound, 2);
  CMonUniverse target = build_cmon_universe(bound, 2);
  JFunctor xi2 = xi_functor(source, target);
  EquivalenceReport report;
  report.functor = xi2.name;
  report.bound = bound;
  add_functoriality(report, xi2);
  report.add(surjective_via_unit_die(xi2, source));
  report.add(locally_surjective_1(xi2));
  report.add(locally_bijective_2(xi2));
  for (auto& c : check_external_equivalence(xi2).criteria) report.add(std::move(c));
  return report;
}

EquivalenceReport check_xi1_equivalence(std::size_t bound) {
  DDUniverse source = build_dd_universe(bound, 1);
  CMonUniverse target = build_cmon_universe(bound, 1);
  JFunctor xi1 = xi_functor(source, target);
  EquivalenceReport report;
  report.functor = xi1.name;
  report.bound = bound;
  add_functoriality(report, xi1);
  for (auto& c : check_external_equivalence(xi1).criteria) report.add(std::move(c));
  return report;
}

IdentityConstraintRestriction restrict_identity_constraint(const std::vector<DDFunctor>& functors) {
  IdentityConstraintRestriction out;
  for (const auto& f : functors) {
    if (f.m2 == f.target.monoid.unit()) {
      out.kept.push_back(f);
    } else {
      ++out.dropped;
    }
  }
  for (const auto& f : out.kept)
    for (const auto& g : out.kept) {
      if (!(f.target == g.source)) continue;
      DDFunctor gf = compose_dd_functors(g, f);
      if (gf.m2 != gf.target.monoid.unit()) {
        out.closed_under_composition = false;
        out.closure_counterexample = std::make_pair(g, f);
        return out;
      }
    }
  return out;
}

EquivalenceReport check_restricted_xi1_equivalence(std::size_t bound) {
  DDUniverse full = build_dd_universe(bound, 1);
  IdentityConstraintRestriction restriction = restrict_identity_constraint(full.one_cells);
  DDUniverse source = build_dd_universe(bound, 1, true);
  CMonUniverse target = build_cmon_universe(bound, 1);
  JFunctor xi1 = xi_functor(source, target);

  EquivalenceReport report;
  report.functor = "xi_1|m=1";
  report.bound = bound;
  CriterionResult closure{"closed_under_composition", 1, restriction.closed_under_composition, {}, nullptr};
  if (!closure.passed) {
    closure.detail = "composite of two m = 1 functors has m != 1";
  }
  report.add(std::move(closure));
  report.add({"restriction_matches", 1, restriction.kept == source.one_cells,
              std::to_string(restriction.kept.size()) + " kept, " +
                  std::to_string(restriction.dropped) + " dropped",
              nullptr});
  add_functoriality(report, xi1);
  ClassicalVerdict classical = classical_equivalence(xi1);
  report.add({"full", 1, classical.full, {}, nullptr});
  report.add({"faithful", 1, classical.faithful, {}, nullptr});
  report.add({"essentially_surjective_classical", 0, classical.essentially_surjective, {}, nullptr});
  for (auto& c : check_external_equivalence(xi1).criteria) report.add(std::move(c));
  return report;
}

}  // namespace deglab
