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

// Bicategories with one 0-cell and one 1-cell, stored as raw tables, and the
// functors, transformations and modifications between them.
//
// Conventions. All 2-cells have source and target the single 1-cell I, so a
// bicategory is a set of cells with two binary operations: vertical
// composition x∘y ("x after y", table `vcomp`) and horizontal composition x∗y
// (table `hcomp`). The constraint cells are
//
//   assoc a : (I∗I)∗I => I∗(I∗I)
//   runit r : I∗I => I, natural in the right factor:  r∘(1∗α) = α∘r
//   lunit l : I∗I => I, natural in the left factor:   l∘(α∗1) = α∘l
//
// and at the single 1-cell the coherence axioms read
//
//   pentagon : a∘a = (1∗a)∘a∘(a∗1)
//   triangle : (1∗r)∘a = l∗1
//
// Nothing here assumes ∗ = ∘; the checker proves it per instance.

#ifndef DEGLAB_DOUBLY_DEGENERATE_HPP
#define DEGLAB_DOUBLY_DEGENERATE_HPP

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "deglab/algebra.hpp"
#include "deglab/equivalence.hpp"

namespace deglab {

struct DDBicat {
  CayleyTable vcomp;
  CayleyTable hcomp;
  Elem id2 = 0;
  Elem assoc = 0;
  Elem assoc_inv = 0;
  Elem lunit = 0;
  Elem lunit_inv = 0;
  Elem runit = 0;
  Elem runit_inv = 0;

  std::size_t cells() const noexcept { return vcomp.size(); }
  Elem v(Elem x, Elem y) const { return vcomp(x, y); }
  Elem h(Elem x, Elem y) const { return hcomp(x, y); }

  bool operator==(const DDBicat&) const = default;
};

/// Every bicategory axiom instantiated at the single 1-cell. Violations are
/// grouped by axiom name: vcomp.{left_unit,right_unit,associativity},
/// hcomp_identity, interchange, {assoc,lunit,runit}_inverse,
/// {assoc,lunit,runit}_naturality, pentagon, triangle. Throws
/// StructuralError on mismatched table sizes or out-of-range indices.
ValidationReport check_ddbicat(const DDBicat& b);

/// The consequences of the axioms, checked exhaustively: vcomp commutative,
/// α∗β = α∘β, α⊙β := r∘(α∗β)∘r⁻¹ agrees with both, l = r, a = 1, and every
/// step of the interchange calculation from β∘α to α∘β (axiom "chain").
struct EHReport {
  ValidationReport findings;
  bool commutative = true;
  bool hcomp_equals_vcomp = true;
  bool odot_agrees = true;
  bool l_equals_r = true;
  bool assoc_trivial = true;
  bool chain_holds = true;

  bool all_pass() const {
    return commutative && hcomp_equals_vcomp && odot_agrees && l_equals_r && assoc_trivial &&
           chain_holds;
  }
};

/// Throws InvalidInput if `b` fails check_ddbicat. Any failure in the
/// returned report means the characterisation is refuted for this instance.
EHReport eckmann_hilton_report(const DDBicat& b);

/// Throws InvalidInput on an invalid `b`, RefutationAlarm if l != r.
CMonDIE extract_cmon_die(const DDBicat& b);

/// Throws InvalidInput if `s` fails check_cmon_die.
DDBicat build_ddbicat(const CMonDIE& s);

// ---------------------------------------------------------------------------
// Functors

/// A weak functor (F, m_F): m2 is the composition constraint φ_II (= m_F),
/// m0 the unit constraint φ_∗.
struct DDFunctor {
  CMonDIE source;
  CMonDIE target;
  std::vector<Elem> map;
  Elem m2 = 0;
  Elem m0 = 0;

  Elem m_f() const noexcept { return m2; }
  MonoidHom hom() const { return {source.monoid, target.monoid, map}; }
  bool operator==(const DDFunctor&) const = default;
};

/// d_Y · m2⁻¹ · (F d_X)⁻¹. Throws InvalidInput when m2 or F d_X has no inverse.
Elem unit_constraint_for(const CMonDIE& source, const CMonDIE& target,
                         const std::vector<Elem>& map, Elem m2);

/// (F, m) with m0 determined by the unit equation.
DDFunctor make_dd_functor(const CMonDIE& source, const CMonDIE& target, std::vector<Elem> map,
                          Elem m2);
DDFunctor identity_dd_functor(const CMonDIE& x);

/// hom laws, invertibility of m2 and m0, unit equation d_Y = F d_X · m2 · m0.
ValidationReport check_dd_functor(const DDFunctor& f);

struct WeakFunctorAnalysis {
  ValidationReport report;
  std::optional<DDFunctor> functor;
  /// m0 recomputed as d_Y · m2⁻¹ · (F d_X)⁻¹ when m2 is invertible.
  std::optional<Elem> m0_from_formula;
  bool naturality_vacuous = false;
  bool associativity_vacuous = false;
};

/// Checks raw weak-functor data between two doubly degenerate bicategories
/// against the bicategorical axioms (evaluated with the actual ∘/∗ tables).
/// Throws InvalidInput if either bicategory is invalid.
WeakFunctorAnalysis analyze_weak_functor(const DDBicat& source, const DDBicat& target,
                                         const std::vector<Elem>& map, Elem m2, Elem m0);

struct LaxPromotion {
  DDFunctor functor;
  Elem m2_inv = 0;
  Elem m0_inv = 0;
};

/// Lax data (m2, m0 not assumed invertible) satisfying the unit equations is
/// promoted to a weak functor by constructing the inverses
///   m0⁻¹ = d_Y⁻¹ · F d_X · m2,   m2⁻¹ = d_Y⁻¹ · F d_X · m0.
/// Throws InvalidInput when the data is not a lax functor.
LaxPromotion promote_lax(const DDBicat& source, const DDBicat& target,
                         const std::vector<Elem>& map, Elem m2, Elem m0);

/// (G, m_G) ∘ (F, m_F) = (GF, G m_F · m_G); the unit constraint composes as
/// G m0_F · m0_G. Throws PreconditionError when f.target != g.source.
DDFunctor compose_dd_functors(const DDFunctor& g, const DDFunctor& f);

// ---------------------------------------------------------------------------
// Transformations and modifications

struct DDTransformation {
  DDFunctor source;
  DDFunctor target;
  Elem sigma = 0;

  bool operator==(const DDTransformation&) const = default;
};

/// Naturality Fα·σ = σ·Gα, the associator axiom σ²·m_F = σ·m_G, the unit
/// axiom σ·m_F·F d_X = m_G·G d_X, and (unless `lax`) invertibility of σ.
ValidationReport check_dd_transformation(const DDTransformation& t, bool lax = false);

/// The unique transformation f => g (σ = m_G · m_F⁻¹) when f and g have the
/// same underlying hom, else nothing.
std::optional<DDTransformation> transformation_between(const DDFunctor& f, const DDFunctor& g);

/// Vertical composite t2 ∘ t1.
DDTransformation compose_dd_transformations(const DDTransformation& t2,
                                            const DDTransformation& t1);
/// Horizontal composite, induced by uniqueness.
DDTransformation hcompose_dd_transformations(const DDTransformation& tau,
                                             const DDTransformation& sigma);

struct DDModification {
  DDTransformation boundary;
  Elem gamma = 0;

  bool operator==(const DDModification&) const = default;
};

/// σ·Γ = Γ·σ.
ValidationReport check_modification(const DDModification& m);

// ---------------------------------------------------------------------------
// Comparison with commutative monoids

/// An identity cell of dimension 2 or 3 in the discrete CMon_j, sitting on
/// the hom `on`.
struct IdentityCell {
  int dimension = 2;
  MonoidHom on;
  bool operator==(const IdentityCell&) const = default;
};

FiniteMonoid xi(const CMonDIE& x);
MonoidHom xi(const DDFunctor& f);
IdentityCell xi(const DDTransformation& t);
IdentityCell xi(const DDModification& m);

struct XiUnfaithfulWitness {
  int j = 1;
  std::optional<std::pair<DDFunctor, DDFunctor>> functors;                // j = 1
  std::optional<std::pair<DDModification, DDModification>> modifications;  // j = 3
};

/// j = 1: (id, 1) and (id, u) on Y for a non-unit invertible u.
/// j = 3: Γ = 1 and Γ = y ≠ 1 on the identity transformation of id_Y.
/// Throws PreconditionError unless j is 1 or 3.
std::optional<XiUnfaithfulWitness> witness_xi_unfaithful(int j, const CMonDIE& y);

/// Both members valid, distinct, and with equal ξ_j images.
ValidationReport verify_xi_witness(const XiUnfaithfulWitness& w);

/// Finite truncation of the totality of doubly degenerate bicategories: all
/// (X, d) with |X| <= bound; for j >= 1 all weak functors; for j = 2 all
/// transformations. With `identity_constraint_only` only functors with
/// m_F = 1 are kept.
struct DDUniverse {
  std::vector<CMonDIE> objects;
  std::vector<DDFunctor> one_cells;
  std::vector<DDTransformation> two_cells;
  std::shared_ptr<const FiniteJCategory> category;
};
DDUniverse build_dd_universe(std::size_t bound, int j, bool identity_constraint_only = false);

/// Commutative monoids of order <= bound with all homs; discrete above.
struct CMonUniverse {
  std::vector<FiniteMonoid> objects;
  std::vector<MonoidHom> one_cells;
  std::shared_ptr<const FiniteJCategory> category;
};
CMonUniverse build_cmon_universe(std::size_t bound, int j);

JFunctor xi_functor(const DDUniverse& source, const CMonUniverse& target);

/// Surjective on objects via the pseudo-inverse (d = 1), locally surjective
/// on 1-cells, locally bijective on 2-cells, and the engine's verdict.
EquivalenceReport check_xi2_equivalence(std::size_t bound);
/// The same engine on ξ₁; expected to fail faithfulness.
EquivalenceReport check_xi1_equivalence(std::size_t bound);

struct IdentityConstraintRestriction {
  std::vector<DDFunctor> kept;
  std::size_t dropped = 0;
  bool closed_under_composition = true;
  std::optional<std::pair<DDFunctor, DDFunctor>> closure_counterexample;
};

/// Keeps the functors with m_F = 1 and checks closure under composition.
IdentityConstraintRestriction restrict_identity_constraint(const std::vector<DDFunctor>& functors);
/// ξ₁ restricted to m_F = 1: full, faithful, essentially surjective.
EquivalenceReport check_restricted_xi1_equivalence(std::size_t bound);

// ---------------------------------------------------------------------------
// Tampering

struct Tampering {
  DDBicat tampered;
  std::string field;
  std::vector<Elem> position;
  Elem old_value = 0;
  Elem new_value = 0;

  nlohmann::json describe() const;
};

/// Changes exactly one table entry or constraint index to a different
/// in-range value. Needs at least two cells.
Tampering tamper_ddbicat(const DDBicat& b, std::mt19937_64& rng);

}  // namespace deglab

#endif  // DEGLAB_DOUBLY_DEGENERATE_HPP
