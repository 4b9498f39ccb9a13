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

#include "deglab/equivalence.hpp"

#include <algorithm>
#include <unordered_set>

namespace deglab {

namespace {

std::uint64_t key(Elem src, Elem tgt) {
  return (static_cast<std::uint64_t>(src) << 32) | static_cast<std::uint64_t>(tgt);
}

const std::vector<Elem> kNoCells;

}  // namespace

// ---------------------------------------------------------------------------
// FiniteJCategory

FiniteJCategory::FiniteJCategory(int j, std::vector<std::string> object_labels,
                                 std::vector<CellBoundary> one_cells,
                                 std::vector<CellBoundary> two_cells,
                                 std::vector<Elem> id1, std::vector<Elem> id2,
                                 Compose compose, HCompose hcompose)
    : j_(j),
      labels_(std::move(object_labels)),
      one_cells_(std::move(one_cells)),
      two_cells_(std::move(two_cells)),
      id1_(std::move(id1)),
      id2_(std::move(id2)),
      compose_(std::move(compose)),
      hcompose_(std::move(hcompose)) {
  if (j_ != 1 && j_ != 2) throw PreconditionError("only j = 1 and j = 2 are supported");
  if (j_ == 1 && (!two_cells_.empty() || !id2_.empty())) {
    throw StructuralError("a 1-category has no 2-cells");
  }
  if (id1_.size() != labels_.size()) throw StructuralError("one identity per 0-cell required");
  for (std::size_t i = 0; i < one_cells_.size(); ++i) {
    const auto& b = one_cells_[i];
    if (b.src >= labels_.size() || b.tgt >= labels_.size()) {
      throw StructuralError("1-cell boundary out of range",
                            "/one_cells/" + std::to_string(i));
    }
    hom_[0][key(b.src, b.tgt)].push_back(i);
  }
  for (std::size_t x = 0; x < id1_.size(); ++x) {
    if (id1_[x] >= one_cells_.size() || one_cells_[id1_[x]] != CellBoundary{x, x}) {
      throw StructuralError("identity 1-cell has wrong boundary", "/id1/" + std::to_string(x));
    }
  }
  if (j_ == 2) {
    if (id2_.size() != one_cells_.size()) throw StructuralError("one identity per 1-cell required");
    for (std::size_t i = 0; i < two_cells_.size(); ++i) {
      const auto& b = two_cells_[i];
      if (b.src >= one_cells_.size() || b.tgt >= one_cells_.size() ||
          one_cells_[b.src] != one_cells_[b.tgt]) {
        throw StructuralError("2-cell boundary out of range or not parallel",
                              "/two_cells/" + std::to_string(i));
      }
      hom_[1][key(b.src, b.tgt)].push_back(i);
    }
    for (std::size_t f = 0; f < id2_.size(); ++f) {
      if (id2_[f] >= two_cells_.size() || two_cells_[id2_[f]] != CellBoundary{f, f}) {
        throw StructuralError("identity 2-cell has wrong boundary", "/id2/" + std::to_string(f));
      }
    }
  }
}

FiniteJCategory FiniteJCategory::from_table(int j, std::vector<std::string> object_labels,
                                            std::vector<CellBoundary> one_cells,
                                            std::vector<CellBoundary> two_cells,
                                            std::vector<Elem> id1, std::vector<Elem> id2,
                                            CompositionTable table) {
  auto shared = std::make_shared<const CompositionTable>(std::move(table));
  return FiniteJCategory(
      j, std::move(object_labels), std::move(one_cells), std::move(two_cells),
      std::move(id1), std::move(id2), [shared](int dim, Elem g, Elem f) {
        auto it = shared->find({dim, g, f});
        return it == shared->end() ? kUndefined : it->second;
      });
}

std::size_t FiniteJCategory::count(int dim) const {
  switch (dim) {
    case 0: return labels_.size();
    case 1: return one_cells_.size();
    case 2: return two_cells_.size();
    default: return 0;
  }
}

const CellBoundary& FiniteJCategory::boundary(int dim, Elem cell) const {
  return dim == 1 ? one_cells_.at(cell) : two_cells_.at(cell);
}

Elem FiniteJCategory::identity(int dim, Elem cell) const {
  return dim == 0 ? id1_.at(cell) : id2_.at(cell);
}

Elem FiniteJCategory::compose(int dim, Elem g, Elem f) const {
  if (boundary(dim, f).tgt != boundary(dim, g).src) return kUndefined;
  return compose_(dim, g, f);
}

const std::vector<Elem>& FiniteJCategory::hom(int dim, Elem src, Elem tgt) const {
  if (dim < 1 || dim > j_) return kNoCells;
  auto it = hom_[dim - 1].find(key(src, tgt));
  return it == hom_[dim - 1].end() ? kNoCells : it->second;
}

// ---------------------------------------------------------------------------
// Category laws

namespace {

/// Laws of composition along dimension `dim` inside each hom-set of
/// (dim-1)-cells.
void check_composition_laws(const FiniteJCategory& c, int dim, std::size_t max_checks,
                            ValidationReport& report) {
  const std::size_t n = c.count(dim);
  std::size_t budget = max_checks == 0 ? static_cast<std::size_t>(-1) : max_checks;
  const std::string suffix = "_" + std::to_string(dim);
  for (Elem f = 0; f < n; ++f) {
    const auto& bf = c.boundary(dim, f);
    if (c.compose(dim, f, c.identity(dim - 1, bf.src)) != f) {
      report.add("right_identity" + suffix, {f});
    }
    if (c.compose(dim, c.identity(dim - 1, bf.tgt), f) != f) {
      report.add("left_identity" + suffix, {f});
    }
  }
  // Composable strings f, g, h are enumerated through hom-sets.
  for (Elem f = 0; f < n && budget > 0; ++f) {
    const auto& bf = c.boundary(dim, f);
    for (Elem g = 0; g < n && budget > 0; ++g) {
      const auto& bg = c.boundary(dim, g);
      if (bg.src != bf.tgt) continue;
      Elem gf = c.compose(dim, g, f);
      if (gf == kUndefined || gf >= n) {
        report.add("composition_defined" + suffix, {g, f});
        continue;
      }
      if (c.boundary(dim, gf) != CellBoundary{bf.src, bg.tgt}) {
        report.add("composition_boundary" + suffix, {g, f});
        continue;
      }
      for (Elem h = 0; h < n && budget > 0; ++h) {
        if (c.boundary(dim, h).src != bg.tgt) continue;
        --budget;
        Elem hg = c.compose(dim, h, g);
        if (hg == kUndefined) continue;  // reported on its own (g, h) pass
        Elem lhs = c.compose(dim, h, gf);
        Elem rhs = c.compose(dim, hg, f);
        if (lhs != rhs) report.add("associativity" + suffix, {h, g, f});
      }
    }
  }
}

}  // namespace

ValidationReport check_jcategory(const FiniteJCategory& c, std::size_t max_checks) {
  ValidationReport report;
  check_composition_laws(c, 1, max_checks, report);
  if (c.j() == 2) {
    check_composition_laws(c, 2, max_checks, report);
    if (c.has_hcompose()) {
      const std::size_t n2 = c.count(2);
      std::size_t budget = max_checks == 0 ? static_cast<std::size_t>(-1) : max_checks;
      // Boundaries of horizontal composites and identities.
      for (Elem a = 0; a < n2 && budget > 0; ++a) {
        const auto& ba = c.boundary(2, a);
        for (Elem b = 0; b < n2 && budget > 0; ++b) {
          const auto& bb = c.boundary(2, b);
          if (c.boundary(1, bb.src).src != c.boundary(1, ba.src).tgt) continue;
          --budget;
          Elem h = c.hcompose(b, a);
          if (h == kUndefined || h >= n2) {
            report.add("hcompose_defined", {b, a});
            continue;
          }
          CellBoundary want{c.compose(1, bb.src, ba.src), c.compose(1, bb.tgt, ba.tgt)};
          if (c.boundary(2, h) != want) report.add("hcompose_boundary", {b, a});
        }
      }
      const std::size_t n1 = c.count(1);
      for (Elem f = 0; f < n1; ++f)
        for (Elem g = 0; g < n1; ++g) {
          if (c.boundary(1, g).src != c.boundary(1, f).tgt) continue;
          if (c.hcompose(c.identity(1, g), c.identity(1, f)) !=
              c.identity(1, c.compose(1, g, f))) {
            report.add("hcompose_identities", {g, f});
          }
        }
      // Interchange: (b'∘b) * (a'∘a) = (b' * a')∘(b * a).
      budget = max_checks == 0 ? static_cast<std::size_t>(-1) : max_checks;
      for (Elem a = 0; a < n2 && budget > 0; ++a) {
        const auto& ba = c.boundary(2, a);
        for (Elem b = 0; b < n2 && budget > 0; ++b) {
          const auto& bb = c.boundary(2, b);
          if (c.boundary(1, bb.src).src != c.boundary(1, ba.src).tgt) continue;
          for (Elem a2 = 0; a2 < n2 && budget > 0; ++a2) {
            if (c.boundary(2, a2).src != ba.tgt) continue;
            for (Elem b2 = 0; b2 < n2 && budget > 0; ++b2) {
              if (c.boundary(2, b2).src != bb.tgt) continue;
              --budget;
              Elem lhs = c.hcompose(c.compose(2, b2, b), c.compose(2, a2, a));
              Elem rhs = c.compose(2, c.hcompose(b2, a2), c.hcompose(b, a));
              if (lhs != rhs) report.add("interchange", {b2, b, a2, a});
            }
          }
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Internal equivalence

nlohmann::json InternalWitness::to_json() const {
  nlohmann::json out = {{"dimension", dim}, {"cells", {first, second}}};
  if (forward != kUndefined) {
    out["forward"] = forward;
    out["backward"] = backward;
    nlohmann::json inner = nlohmann::json::array();
    for (const auto& n : nested) inner.push_back(n.to_json());
    out["nested"] = std::move(inner);
  }
  return out;
}

std::optional<InternalWitness> internally_equivalent(const FiniteJCategory& x, int dim,
                                                     Elem a, Elem b) {
  if (dim >= 1 && x.boundary(dim, a) != x.boundary(dim, b)) return std::nullopt;
  if (dim == x.j()) {
    if (a != b) return std::nullopt;
    return InternalWitness{dim, a, b, kUndefined, kUndefined, {}};
  }
  const Elem id_a = x.identity(dim, a);
  const Elem id_b = x.identity(dim, b);
  for (Elem u : x.hom(dim + 1, a, b)) {
    for (Elem v : x.hom(dim + 1, b, a)) {
      Elem vu = x.compose(dim + 1, v, u);
      if (vu == kUndefined) continue;
      auto w1 = internally_equivalent(x, dim + 1, vu, id_a);
      if (!w1) continue;
      Elem uv = x.compose(dim + 1, u, v);
      if (uv == kUndefined) continue;
      auto w2 = internally_equivalent(x, dim + 1, uv, id_b);
      if (!w2) continue;
      return InternalWitness{dim, a, b, u, v, {std::move(*w1), std::move(*w2)}};
    }
  }
  return std::nullopt;
}

bool verify_witness(const FiniteJCategory& x, const InternalWitness& w) {
  if (w.dim < 0 || w.dim > x.j()) return false;
  if (w.dim == x.j()) return w.first == w.second && w.nested.empty();
  if (w.nested.size() != 2) return false;
  const auto& u_cells = x.hom(w.dim + 1, w.first, w.second);
  const auto& v_cells = x.hom(w.dim + 1, w.second, w.first);
  if (std::find(u_cells.begin(), u_cells.end(), w.forward) == u_cells.end()) return false;
  if (std::find(v_cells.begin(), v_cells.end(), w.backward) == v_cells.end()) return false;
  const auto& n0 = w.nested[0];
  const auto& n1 = w.nested[1];
  if (n0.dim != w.dim + 1 || n1.dim != w.dim + 1) return false;
  if (n0.first != x.compose(w.dim + 1, w.backward, w.forward)) return false;
  if (n0.second != x.identity(w.dim, w.first)) return false;
  if (n1.first != x.compose(w.dim + 1, w.forward, w.backward)) return false;
  if (n1.second != x.identity(w.dim, w.second)) return false;
  return verify_witness(x, n0) && verify_witness(x, n1);
}

// ---------------------------------------------------------------------------
// JFunctor

ValidationReport check_jfunctor(const JFunctor& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (s.j() != t.j()) throw PreconditionError("functor between categories of different dimension");
  if (f.maps.size() != static_cast<std::size_t>(s.j()) + 1) {
    throw StructuralError("functor needs one cell map per dimension", "/maps");
  }
  for (int k = 0; k <= s.j(); ++k) {
    if (f.maps[k].size() != s.count(k)) {
      throw StructuralError("cell map has wrong length", "/maps/" + std::to_string(k));
    }
    for (Elem c : f.maps[k]) {
      if (c >= t.count(k)) throw StructuralError("cell image out of range", "/maps/" + std::to_string(k));
    }
  }
  ValidationReport report;
  for (int k = 1; k <= s.j(); ++k) {
    const std::string suffix = "_" + std::to_string(k);
    for (Elem c = 0; c < s.count(k); ++c) {
      const auto& b = s.boundary(k, c);
      const auto& img = t.boundary(k, f.maps[k][c]);
      if (img.src != f.maps[k - 1][b.src] || img.tgt != f.maps[k - 1][b.tgt]) {
        report.add("preserves_boundary" + suffix, {c});
      }
    }
  }
  for (int k = 0; k < s.j(); ++k) {
    const std::string suffix = "_" + std::to_string(k + 1);
    for (Elem c = 0; c < s.count(k); ++c) {
      if (f.maps[k + 1][s.identity(k, c)] != t.identity(k, f.maps[k][c])) {
        report.add("preserves_identity" + suffix, {c});
      }
    }
  }
  if (!report.ok()) return report;
  for (int k = 1; k <= s.j(); ++k) {
    const std::string suffix = "_" + std::to_string(k);
    for (Elem a = 0; a < s.count(k); ++a) {
      const auto& ba = s.boundary(k, a);
      // Composable partners of a are the k-cells out of tgt(a) with the same
      // lower boundary, i.e. hom(k, ba.tgt, *).
      for (Elem b = 0; b < s.count(k); ++b) {
        if (s.boundary(k, b).src != ba.tgt) continue;
        Elem ba_comp = s.compose(k, b, a);
        if (ba_comp == kUndefined) continue;
        if (f.maps[k][ba_comp] != t.compose(k, f.maps[k][b], f.maps[k][a])) {
          report.add("preserves_composition" + suffix, {b, a});
        }
      }
    }
  }
  if (s.j() == 2 && s.has_hcompose() && t.has_hcompose()) {
    for (Elem a = 0; a < s.count(2); ++a)
      for (Elem b = 0; b < s.count(2); ++b) {
        if (s.boundary(1, s.boundary(2, b).src).src != s.boundary(1, s.boundary(2, a).src).tgt)
          continue;
        if (f.maps[2][s.hcompose(b, a)] != t.hcompose(f.maps[2][b], f.maps[2][a])) {
          report.add("preserves_hcomposition", {b, a});
        }
      }
  }
  return report;
}

JFunctor compose(const JFunctor& g, const JFunctor& f) {
  if (f.target != g.source) throw PreconditionError("functors are not composable");
  JFunctor out{f.source, g.target, {}, g.name + "∘" + f.name};
  for (std::size_t k = 0; k < f.maps.size(); ++k) {
    std::vector<Elem> m(f.maps[k].size());
    for (std::size_t c = 0; c < m.size(); ++c) m[c] = g.maps[k][f.maps[k][c]];
    out.maps.push_back(std::move(m));
  }
  return out;
}

JFunctor identity_jfunctor(std::shared_ptr<const FiniteJCategory> c) {
  JFunctor out{c, c, {}, "id"};
  for (int k = 0; k <= c->j(); ++k) {
    std::vector<Elem> m(c->count(k));
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = i;
    out.maps.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports

const CriterionResult* EquivalenceReport::first_failure() const {
  for (const auto& c : criteria)
    if (!c.passed) return &c;
  return nullptr;
}

const CriterionResult* EquivalenceReport::find(std::string_view criterion) const {
  for (const auto& c : criteria)
    if (c.criterion == criterion) return &c;
  return nullptr;
}

void EquivalenceReport::add(CriterionResult r) {
  if (!r.passed) equivalence = false;
  criteria.push_back(std::move(r));
}

nlohmann::json EquivalenceReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : criteria) {
    nlohmann::json item = {{"criterion", c.criterion},
                           {"dimension", c.dimension},
                           {"passed", c.passed},
                           {"witness", c.witness}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    cs.push_back(std::move(item));
  }
  nlohmann::json out = {{"functor", functor}, {"equivalence", equivalence}, {"criteria", cs}};
  out["bound"] = bound ? nlohmann::json(*bound) : nlohmann::json(nullptr);
  return out;
}

// ---------------------------------------------------------------------------
// External equivalence

EquivalenceReport check_external_equivalence(const JFunctor& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (s.j() != t.j()) throw PreconditionError("functor between categories of different dimension");
  const int j = s.j();
  EquivalenceReport report;
  report.functor = f.name;

  {
    CriterionResult r{"essentially_surjective", 0, true, {}, nullptr};
    std::unordered_set<Elem> images(f.maps[0].begin(), f.maps[0].end());
    for (Elem y = 0; y < t.count(0) && r.passed; ++y) {
      if (images.count(y)) continue;
      bool hit = false;
      for (Elem x = 0; x < s.count(0) && !hit; ++x)
        hit = internally_equivalent(t, 0, f.maps[0][x], y).has_value();
      if (!hit) {
        r.passed = false;
        r.detail = "no 0-cell maps to anything equivalent to " + t.label(y);
        r.witness = {{"target_cell", y}, {"label", t.label(y)}};
      }
    }
    report.add(std::move(r));
  }

  for (int m = 1; m <= j; ++m) {
    CriterionResult r{"locally_essentially_surjective", m, true, {}, nullptr};
    // Pairs of source (m-1)-cells: all pairs of 0-cells for m = 1, parallel
    // 1-cells for m = 2.
    auto visit = [&](Elem a1, Elem a2) {
      const auto& source_cells = s.hom(m, a1, a2);
      std::unordered_set<Elem> images;
      for (Elem c : source_cells) images.insert(f.maps[m][c]);
      for (Elem beta : t.hom(m, f.maps[m - 1][a1], f.maps[m - 1][a2])) {
        if (images.count(beta)) continue;
        bool hit = false;
        for (Elem c : source_cells) {
          if (internally_equivalent(t, m, f.maps[m][c], beta)) {
            hit = true;
            break;
          }
        }
        if (!hit) {
          r.passed = false;
          r.detail = "a " + std::to_string(m) + "-cell between images has no equivalent preimage";
          r.witness = {{"source_boundary", {a1, a2}}, {"target_cell", beta}};
          return;
        }
      }
    };
    if (m == 1) {
      for (Elem a1 = 0; a1 < s.count(0) && r.passed; ++a1)
        for (Elem a2 = 0; a2 < s.count(0) && r.passed; ++a2) visit(a1, a2);
    } else {
      for (Elem x1 = 0; x1 < s.count(0) && r.passed; ++x1)
        for (Elem x2 = 0; x2 < s.count(0) && r.passed; ++x2) {
          const auto& cells = s.hom(1, x1, x2);
          for (Elem a1 : cells) {
            for (Elem a2 : cells) {
              visit(a1, a2);
              if (!r.passed) break;
            }
            if (!r.passed) break;
          }
        }
    }
    report.add(std::move(r));
  }

  {
    CriterionResult r{"locally_faithful", j, true, {}, nullptr};
    auto visit = [&](const std::vector<Elem>& cells) {
      for (std::size_t p = 0; p < cells.size(); ++p)
        for (std::size_t q = p + 1; q < cells.size(); ++q)
          if (f.maps[j][cells[p]] == f.maps[j][cells[q]]) {
            r.passed = false;
            r.detail = "two distinct parallel " + std::to_string(j) + "-cells have the same image";
            r.witness = {{"cells", {cells[p], cells[q]}}, {"image", f.maps[j][cells[p]]}};
            return;
          }
    };
    if (j == 1) {
      for (Elem x1 = 0; x1 < s.count(0) && r.passed; ++x1)
        for (Elem x2 = 0; x2 < s.count(0) && r.passed; ++x2) visit(s.hom(1, x1, x2));
    } else {
      for (Elem x1 = 0; x1 < s.count(0) && r.passed; ++x1)
        for (Elem x2 = 0; x2 < s.count(0) && r.passed; ++x2)
          for (Elem a1 : s.hom(1, x1, x2)) {
            for (Elem a2 : s.hom(1, x1, x2)) {
              visit(s.hom(2, a1, a2));
              if (!r.passed) break;
            }
            if (!r.passed) break;
          }
    }
    report.add(std::move(r));
  }
  return report;
}

ClassicalVerdict classical_equivalence(const JFunctor& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (s.j() != 1 || t.j() != 1) throw PreconditionError("classical criteria are for j = 1");
  ClassicalVerdict v;
  for (Elem x1 = 0; x1 < s.count(0); ++x1)
    for (Elem x2 = 0; x2 < s.count(0); ++x2) {
      std::vector<Elem> images;
      for (Elem c : s.hom(1, x1, x2)) images.push_back(f.maps[1][c]);
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) v.faithful = false;
      for (Elem b : t.hom(1, f.maps[0][x1], f.maps[0][x2]))
        if (!std::binary_search(images.begin(), images.end(), b)) v.full = false;
    }
  auto isomorphic_objects = [&](Elem a, Elem b) {
    for (Elem u : t.hom(1, a, b))
      for (Elem w : t.hom(1, b, a))
        if (t.compose(1, w, u) == t.identity(0, a) && t.compose(1, u, w) == t.identity(0, b))
          return true;
    return false;
  };
  for (Elem y = 0; y < t.count(0); ++y) {
    bool hit = false;
    for (Elem x = 0; x < s.count(0) && !hit; ++x) hit = isomorphic_objects(f.maps[0][x], y);
    if (!hit) v.essentially_surjective = false;
  }
  return v;
}

CriterionResult surjective_on_objects(const JFunctor& f) {
  CriterionResult r{"surjective_on_objects", 0, true, {}, nullptr};
  std::unordered_set<Elem> images(f.maps[0].begin(), f.maps[0].end());
  for (Elem y = 0; y < f.target->count(0); ++y) {
    if (!images.count(y)) {
      r.passed = false;
      r.detail = f.target->label(y) + " is not the image of any 0-cell";
      r.witness = {{"target_cell", y}, {"label", f.target->label(y)}};
      break;
    }
  }
  return r;
}

}  // namespace deglab
