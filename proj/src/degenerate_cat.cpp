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

#include "deglab/degenerate_cat.hpp"

#include <map>
#include <set>
#include <tuple>

namespace deglab {

ValidationReport check_degenerate_category(const DegenerateCategory& c) {
  ValidationReport report;
  if (c.object_label != kSingleObject) {
    report.add("object_label", {}, "single object must be labelled ∗, got '" + c.object_label + "'");
  }
  const FiniteMonoid& m = c.hom;
  const Elem id = m.unit();
  for (Elem f = 0; f < m.size(); ++f) {
    if (m.mul(f, id) != f) report.add("right_identity", {f});
    if (m.mul(id, f) != f) report.add("left_identity", {f});
  }
  for (Elem h = 0; h < m.size(); ++h)
    for (Elem g = 0; g < m.size(); ++g)
      for (Elem f = 0; f < m.size(); ++f)
        if (m.mul(h, m.mul(g, f)) != m.mul(m.mul(h, g), f))
          report.add("composition_associative", {h, g, f});
  return report;
}

FiniteMonoid cat_to_monoid(const DegenerateCategory& c) { return c.hom; }

DegenerateCategory monoid_to_cat(const FiniteMonoid& m) {
  auto report = check_monoid(m);
  if (!report.ok()) throw InvalidInput("not a monoid", std::move(report));
  return DegenerateCategory{kSingleObject, m};
}

ValidationReport check_deg_functor(const DegFunctor& f) {
  const FiniteMonoid& s = f.source.hom;
  const FiniteMonoid& t = f.target.hom;
  if (f.on_morphisms.size() != s.size()) {
    throw StructuralError("functor morphism map has wrong length", "/on_morphisms");
  }
  for (Elem x : f.on_morphisms) {
    if (x >= t.size()) throw StructuralError("morphism image out of range", "/on_morphisms");
  }
  ValidationReport report;
  if (f.on_morphisms[s.unit()] != t.unit()) report.add("preserves_identity", {s.unit()});
  for (Elem g = 0; g < s.size(); ++g)
    for (Elem h = 0; h < s.size(); ++h)
      if (f.on_morphisms[s.mul(g, h)] != t.mul(f.on_morphisms[g], f.on_morphisms[h]))
        report.add("preserves_composition", {g, h});
  return report;
}

MonoidHom functor_to_hom(const DegFunctor& f) {
  return {cat_to_monoid(f.source), cat_to_monoid(f.target), f.on_morphisms};
}

std::vector<DegFunctor> enumerate_deg_functors(const DegenerateCategory& source,
                                               const DegenerateCategory& target) {
  std::vector<DegFunctor> out;
  const std::size_t n = source.hom.size();
  const std::size_t k = target.hom.size();
  DegFunctor candidate{source, target, std::vector<Elem>(n, 0)};
  while (true) {
    if (check_deg_functor(candidate).ok()) out.push_back(candidate);
    std::size_t i = n;
    bool carry = true;
    while (carry && i > 0) {
      --i;
      if (++candidate.on_morphisms[i] < k) {
        carry = false;
      } else {
        candidate.on_morphisms[i] = 0;
      }
    }
    if (carry) return out;
  }
}

ValidationReport check_nat_trans(const DegNatTrans& t) {
  if (!(t.F.source == t.G.source) || !(t.F.target == t.G.target)) {
    throw StructuralError("F and G must have the same source and target");
  }
  if (t.F.map.size() != t.F.source.size() || t.G.map.size() != t.G.source.size()) {
    throw StructuralError("functor map has wrong length");
  }
  if (t.d >= t.F.target.size()) throw StructuralError("component out of range", "/d");
  ValidationReport report;
  const FiniteMonoid& y = t.F.target;
  for (Elem x = 0; x < t.F.source.size(); ++x) {
    Elem lhs = y.mul(t.d, t.F(x));
    Elem rhs = y.mul(t.G(x), t.d);
    if (lhs != rhs) {
      report.add("naturality", {x},
                 "d·F(x) = " + std::to_string(lhs) + " but G(x)·d = " + std::to_string(rhs));
    }
  }
  return report;
}

std::optional<DegNatTrans> find_nonidentity_nat_trans(const FiniteMonoid& m) {
  for (Elem z : center(m)) {
    if (z == m.unit()) continue;
    DegNatTrans t{identity_hom(m), identity_hom(m), z};
    if (check_nat_trans(t).ok()) return t;
  }
  return std::nullopt;
}

namespace {

using HomKey = std::tuple<Elem, Elem, std::vector<Elem>>;

/// A finite 1-category whose 0-cells are monoids (or one-object categories,
/// which carry the same data) and whose 1-cells are the supplied maps.
struct MonoidUniverse {
  std::vector<FiniteMonoid> objects;
  std::vector<CellBoundary> cells;
  std::vector<std::vector<Elem>> maps;
  std::map<HomKey, Elem> index;
  std::vector<Elem> identities;

  std::shared_ptr<const FiniteJCategory> build(const std::string& prefix) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < objects.size(); ++i) {
      labels.push_back(prefix + std::to_string(i) + "[order " +
                       std::to_string(objects[i].size()) + "]");
    }
    identities.assign(objects.size(), kUndefined);
    for (Elem x = 0; x < objects.size(); ++x) {
      std::vector<Elem> id(objects[x].size());
      for (Elem e = 0; e < id.size(); ++e) id[e] = e;
      auto it = index.find({x, x, id});
      if (it == index.end()) throw RefutationAlarm("identity map missing from universe");
      identities[x] = it->second;
    }
    // The composition closure lives inside the lambda.
    auto self = std::make_shared<MonoidUniverse>(*this);
    return std::make_shared<const FiniteJCategory>(
        1, std::move(labels), cells, std::vector<CellBoundary>{}, identities,
        std::vector<Elem>{}, [self](int, Elem g, Elem f) -> Elem {
          const auto& mf = self->maps[f];
          const auto& mg = self->maps[g];
          std::vector<Elem> gf(mf.size());
          for (std::size_t i = 0; i < mf.size(); ++i) gf[i] = mg[mf[i]];
          auto it = self->index.find({self->cells[f].src, self->cells[g].tgt, gf});
          return it == self->index.end() ? kUndefined : it->second;
        });
  }

  Elem add(Elem src, Elem tgt, std::vector<Elem> map) {
    Elem id = cells.size();
    cells.push_back({src, tgt});
    index.emplace(HomKey{src, tgt, map}, id);
    maps.push_back(std::move(map));
    return id;
  }
};

}  // namespace

EquivalenceReport phi1_check(const std::vector<DegenerateCategory>& sample) {
  if (sample.empty()) throw PreconditionError("phi1_check needs a nonempty sample");
  for (const auto& c : sample) {
    auto report = check_degenerate_category(c);
    if (!report.ok()) throw InvalidInput("sample contains an invalid degenerate category", report);
  }

  // Source: the sample with every functor between its members.
  MonoidUniverse source;
  for (const auto& c : sample) source.objects.push_back(c.hom);
  std::vector<DegFunctor> functors;
  for (Elem i = 0; i < sample.size(); ++i)
    for (Elem k = 0; k < sample.size(); ++k)
      for (auto& f : enumerate_deg_functors(sample[i], sample[k])) {
        source.add(i, k, f.on_morphisms);
        functors.push_back(std::move(f));
      }

  // Target: every monoid of every represented order, plus the sample's own
  // monoids when they are not in canonical form.
  MonoidUniverse target;
  std::set<std::size_t> orders;
  for (const auto& c : sample) orders.insert(c.hom.size());
  std::size_t max_order = *orders.rbegin();
  for (std::size_t n : orders)
    for (auto& m : enumerate_monoids(n, false, std::max(max_order, max_enumeration_size())))
      target.objects.push_back(std::move(m));
  auto find_object = [&](const FiniteMonoid& m) -> Elem {
    for (Elem y = 0; y < target.objects.size(); ++y)
      if (target.objects[y] == m) return y;
    return kUndefined;
  };
  std::vector<Elem> object_map;
  for (const auto& c : sample) {
    Elem y = find_object(cat_to_monoid(c));
    if (y == kUndefined) {
      target.objects.push_back(cat_to_monoid(c));
      y = target.objects.size() - 1;
    }
    object_map.push_back(y);
  }
  for (Elem a = 0; a < target.objects.size(); ++a)
    for (Elem b = 0; b < target.objects.size(); ++b)
      for (auto& h : enumerate_homs(target.objects[a], target.objects[b]))
        target.add(a, b, std::move(h.map));

  auto source_cat = source.build("C");
  auto target_cat = target.build("M");

  JFunctor phi1{source_cat, target_cat, {object_map, {}}, "phi_1"};
  EquivalenceReport report;
  report.functor = "phi_1";
  report.bound = max_order;

  CriterionResult dropped{"projection_total", 1, true, {}, nullptr};
  for (Elem c = 0; c < functors.size(); ++c) {
    MonoidHom h = functor_to_hom(functors[c]);
    auto it = target.index.find(
        {object_map[source.cells[c].src], object_map[source.cells[c].tgt], h.map});
    if (it == target.index.end() || !check_hom(h).ok()) {
      dropped.passed = false;
      dropped.detail = "functor is not sent to a monoid homomorphism";
      dropped.witness = {{"functor", c}, {"on_morphisms", functors[c].on_morphisms}};
      break;
    }
    phi1.maps[1].push_back(it->second);
  }
  report.add(dropped);
  if (!dropped.passed) return report;

  auto functoriality = check_jfunctor(phi1);
  report.add({"functorial", 1, functoriality.ok(), functoriality.summary(), nullptr});

  ClassicalVerdict classical = classical_equivalence(phi1);
  report.add({"full", 1, classical.full, {}, nullptr});
  report.add({"faithful", 1, classical.faithful, {}, nullptr});
  report.add(surjective_on_objects(phi1));
  for (auto& c : check_external_equivalence(phi1).criteria) report.add(std::move(c));
  return report;
}

}  // namespace deglab
