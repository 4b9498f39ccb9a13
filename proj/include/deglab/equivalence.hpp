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

// Internal equivalence of cells and external j-equivalence of j-functors for
// finite strict 1- and 2-categories, via the recursive "unravelled" criteria:
// locally essentially surjective at every dimension plus locally faithful at
// the top dimension.

#ifndef DEGLAB_EQUIVALENCE_HPP
#define DEGLAB_EQUIVALENCE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "deglab/report.hpp"

namespace deglab {

struct CellBoundary {
  Elem src = 0;
  Elem tgt = 0;
  bool operator==(const CellBoundary&) const = default;
};

/// A finite strict j-category, j in {1, 2}, in globular form.
///
/// cells(0) are the 0-cells; for k >= 1 every k-cell has a source and target
/// (k-1)-cell, which are parallel when k = 2. identity(k, c) is the identity
/// (k+1)-cell on the k-cell c. compose(k, g, f) composes k-cells along their
/// (k-1)-dimensional boundary: g after f, defined iff tgt(f) == src(g).
///
/// Horizontal composition of 2-cells is optional data (`hcompose`), used only
/// by check_jcategory; the equivalence engine never needs it.
class FiniteJCategory {
 public:
  using Compose = std::function<Elem(int dim, Elem g, Elem f)>;
  using HCompose = std::function<Elem(Elem beta, Elem alpha)>;

  FiniteJCategory(int j, std::vector<std::string> object_labels,
                  std::vector<CellBoundary> one_cells,
                  std::vector<CellBoundary> two_cells, std::vector<Elem> id1,
                  std::vector<Elem> id2, Compose compose, HCompose hcompose = {});

  /// Composition given by an explicit table keyed by (dim, g, f). Missing
  /// composable pairs compose to kUndefined and are reported by
  /// check_jcategory.
  using CompositionTable = std::map<std::tuple<int, Elem, Elem>, Elem>;
  static FiniteJCategory from_table(int j, std::vector<std::string> object_labels,
                                    std::vector<CellBoundary> one_cells,
                                    std::vector<CellBoundary> two_cells,
                                    std::vector<Elem> id1, std::vector<Elem> id2,
                                    CompositionTable table);

  int j() const noexcept { return j_; }
  std::size_t count(int dim) const;
  const CellBoundary& boundary(int dim, Elem cell) const;
  Elem identity(int dim, Elem cell) const;
  Elem compose(int dim, Elem g, Elem f) const;
  bool has_hcompose() const noexcept { return static_cast<bool>(hcompose_); }
  Elem hcompose(Elem beta, Elem alpha) const { return hcompose_(beta, alpha); }
  const std::string& label(Elem object) const { return labels_[object]; }

  /// Cells of dimension `dim` from `src` to `tgt` (both (dim-1)-cells).
  const std::vector<Elem>& hom(int dim, Elem src, Elem tgt) const;

 private:
  int j_;
  std::vector<std::string> labels_;
  std::vector<CellBoundary> one_cells_;
  std::vector<CellBoundary> two_cells_;
  std::vector<Elem> id1_;
  std::vector<Elem> id2_;
  Compose compose_;
  HCompose hcompose_;
  // hom_[dim-1] maps the key (src, tgt) to the cell list.
  std::unordered_map<std::uint64_t, std::vector<Elem>> hom_[2];
};

/// Category / strict 2-category laws. `max_checks` bounds the composable
/// strings visited per law (0 = unlimited).
ValidationReport check_jcategory(const FiniteJCategory& c, std::size_t max_checks = 0);

/// A witness that two cells are internally equivalent: `forward` and
/// `backward` connect them, and `nested[0]`, `nested[1]` witness
/// backward∘forward ~ 1 and forward∘backward ~ 1 one dimension up. At the top
/// dimension equivalence is equality and there is nothing nested.
struct InternalWitness {
  int dim = 0;  // dimension of the cells being compared
  Elem first = 0;
  Elem second = 0;
  Elem forward = kUndefined;
  Elem backward = kUndefined;
  std::vector<InternalWitness> nested;

  nlohmann::json to_json() const;
};

/// Are the `dim`-cells a and b internally equivalent in X? For dim = 0 these
/// are 0-cells; for dim >= 1 they must be parallel. Exhaustive search.
std::optional<InternalWitness> internally_equivalent(const FiniteJCategory& x,
                                                     int dim, Elem a, Elem b);

/// Re-checks a witness against X.
bool verify_witness(const FiniteJCategory& x, const InternalWitness& w);

struct JFunctor {
  std::shared_ptr<const FiniteJCategory> source;
  std::shared_ptr<const FiniteJCategory> target;
  /// maps[k][c] is the image of the k-cell c, k = 0..j.
  std::vector<std::vector<Elem>> maps;
  std::string name;
};

/// Preservation of boundaries, identities and composition.
ValidationReport check_jfunctor(const JFunctor& f);
JFunctor compose(const JFunctor& g, const JFunctor& f);
JFunctor identity_jfunctor(std::shared_ptr<const FiniteJCategory> c);

struct CriterionResult {
  std::string criterion;
  int dimension = 0;
  bool passed = true;
  std::string detail;
  nlohmann::json witness;  // null when passed
};

struct EquivalenceReport {
  std::string functor;
  bool equivalence = true;
  std::optional<std::size_t> bound;
  std::vector<CriterionResult> criteria;

  const CriterionResult* first_failure() const;
  const CriterionResult* find(std::string_view criterion) const;
  void add(CriterionResult r);
  nlohmann::json to_json() const;
};

/// External j-equivalence via the unravelled criteria. Criteria reported:
/// "essentially_surjective" (dimension 0), "locally_essentially_surjective"
/// (dimensions 1..j) and "locally_faithful" (dimension j).
EquivalenceReport check_external_equivalence(const JFunctor& f);

/// Classical j = 1 criteria, computed independently of the engine: full,
/// faithful, and essentially surjective with isomorphism as equivalence.
struct ClassicalVerdict {
  bool full = true;
  bool faithful = true;
  bool essentially_surjective = true;
  bool equivalence() const { return full && faithful && essentially_surjective; }
};
ClassicalVerdict classical_equivalence(const JFunctor& f);

/// Surjectivity on 0-cells on the nose (every target 0-cell is an image).
CriterionResult surjective_on_objects(const JFunctor& f);

}  // namespace deglab

#endif  // DEGLAB_EQUIVALENCE_HPP
