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

// Finite monoidal categories, and the same data read as bicategories with a
// single 0-cell.
//
// Conventions:
//   a_{A,B,C} : (A⊗B)⊗C -> A⊗(B⊗C)
//   l_A       : I⊗A -> A
//   r_A       : A⊗I -> A
// A monoidal functor carries φ_{A,B}: FA⊗FB -> F(A⊗B) and φ: I -> FI.
//
// A transformation (α, {α_A}) between monoidal functors (F, φ) and (G, ψ) has
// a distinguished object α of the target and components
//   α_A : GA⊗α -> α⊗FA      (weak and lax)
//   α_A : α⊗FA -> GA⊗α      (oplax)

#ifndef DEGLAB_MONOIDAL_HPP
#define DEGLAB_MONOIDAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deglab/equivalence.hpp"
#include "deglab/finite_category.hpp"

namespace deglab {

struct FinMonoidalCategory {
  FiniteCategory base;
  std::vector<std::vector<Elem>> tensor_obj;
  std::vector<std::vector<Elem>> tensor_mor;
  Elem unit = 0;
  /// Indexed by (A*n + B)*n + C for n objects.
  std::vector<Elem> assoc;
  std::vector<Elem> assoc_inv;
  std::vector<Elem> lunit;
  std::vector<Elem> lunit_inv;
  std::vector<Elem> runit;
  std::vector<Elem> runit_inv;

  std::size_t objects() const noexcept { return base.objects; }
  std::size_t morphisms() const noexcept { return base.morphism_count(); }
  Elem o(Elem a, Elem b) const { return tensor_obj[a][b]; }
  Elem t(Elem f, Elem g) const { return tensor_mor[f][g]; }
  Elem c(Elem g, Elem f) const { return base.c(g, f); }
  Elem c(std::initializer_list<Elem> chain) const { return base.c(chain); }
  Elem id(Elem a) const { return base.id(a); }
  Elem a(Elem x, Elem y, Elem z) const { return assoc[triple(x, y, z)]; }
  Elem ai(Elem x, Elem y, Elem z) const { return assoc_inv[triple(x, y, z)]; }
  Elem l(Elem x) const { return lunit[x]; }
  Elem li(Elem x) const { return lunit_inv[x]; }
  Elem r(Elem x) const { return runit[x]; }
  Elem ri(Elem x) const { return runit_inv[x]; }
  std::size_t triple(Elem x, Elem y, Elem z) const { return (x * objects() + y) * objects() + z; }

  bool operator==(const FinMonoidalCategory&) const = default;
};

/// Shapes and ranges; throws StructuralError with a pointer.
void check_monoidal_shape(const FinMonoidalCategory& m);

/// Itemized: base.* (category laws), tensor_boundary, constraint_boundary,
/// tensor_identity, tensor_interchange, {assoc,lunit,runit}_inverse,
/// {assoc,lunit,runit}_naturality, pentagon (A,B,C,D), triangle (A,B).
ValidationReport check_monoidal(const FinMonoidalCategory& m);

/// Replaces a_{A,B,C} and its inverse by another isomorphism in the same
/// hom-set, if there is one.
std::optional<FinMonoidalCategory> tamper_associator(const FinMonoidalCategory& m, Elem a,
                                                     Elem b, Elem c);

// Stock instances.
FinMonoidalCategory trivial_moncat();
/// Objects Z/n, identities only, tensor = addition, all constraints identities.
FinMonoidalCategory discrete_cyclic_moncat(std::size_t n);
/// Objects Z/2, hom(x,x) = {+1,-1} (morphism 2x+s has sign (-1)^s), tensor
/// adds objects and multiplies signs, a_{x,y,z} = (-1)^{xyz}, unitors trivial.
FinMonoidalCategory sign_moncat();
/// Indiscrete on {0,1} with x⊗y = 1-y and unit 0; every diagram commutes, yet
/// I⊗x != x and (x⊗y)⊗z != x⊗(y⊗z) as objects.
FinMonoidalCategory flip_moncat();

struct NamedMoncat {
  std::string name;
  FinMonoidalCategory category;
};
std::vector<NamedMoncat> stock_moncats();

// ---------------------------------------------------------------------------
// Monoidal functors and monoidal transformations

struct MonoidalFunctor {
  FinMonoidalCategory source;
  FinMonoidalCategory target;
  std::vector<Elem> on_objects;
  std::vector<Elem> on_morphisms;
  /// φ_{A,B} at A*n + B.
  std::vector<Elem> phi;
  Elem phi0 = 0;

  Elem obj(Elem a) const { return on_objects[a]; }
  Elem operator()(Elem f) const { return on_morphisms[f]; }
  Elem p(Elem a, Elem b) const { return phi[a * source.objects() + b]; }
  FinFunctor functor() const { return {source.base, target.base, on_objects, on_morphisms}; }

  bool operator==(const MonoidalFunctor&) const = default;
};

/// functor.*, phi_boundary, phi_naturality (f, g), associativity (A,B,C),
/// left_unit (B), right_unit (A) and, unless lax, phi_invertible.
ValidationReport check_monoidal_functor(const MonoidalFunctor& f, bool lax = false);
MonoidalFunctor identity_monoidal_functor(const FinMonoidalCategory& m);
/// (G∘F, G φ^F_{A,B} ∘ φ^G_{FA,FB}, G φ^F ∘ φ^G).
MonoidalFunctor compose_monoidal_functors(const MonoidalFunctor& g, const MonoidalFunctor& f);
std::vector<MonoidalFunctor> enumerate_monoidal_functors(const FinMonoidalCategory& source,
                                                         const FinMonoidalCategory& target,
                                                         bool lax = false);

/// Components θ_A: FA -> GA.
struct MonoidalTransformation {
  MonoidalFunctor source;
  MonoidalFunctor target;
  std::vector<Elem> components;

  bool operator==(const MonoidalTransformation&) const = default;
};

/// component_boundary, naturality, tensor_compatible
/// (θ_{A⊗B} ∘ φ_{A,B} = ψ_{A,B} ∘ (θ_A ⊗ θ_B)), unit_compatible (θ_I ∘ φ = ψ).
ValidationReport check_monoidal_transformation(const MonoidalTransformation& t);
MonoidalTransformation identity_monoidal_transformation(const MonoidalFunctor& f);
MonoidalTransformation compose_monoidal_transformations(const MonoidalTransformation& t2,
                                                        const MonoidalTransformation& t1);
std::vector<MonoidalTransformation> enumerate_monoidal_transformations(const MonoidalFunctor& f,
                                                                       const MonoidalFunctor& g);

// ---------------------------------------------------------------------------
// Transformations with a distinguished object

enum class TransformationKind { Weak, Lax, Oplax };
const char* to_string(TransformationKind k);
/// "weak", "lax" or "oplax"; throws StructuralError otherwise.
TransformationKind transformation_kind_from_string(const std::string& s);

struct DegTransformation {
  MonoidalFunctor source;
  MonoidalFunctor target;
  Elem dist = 0;
  std::vector<Elem> components;
  TransformationKind kind = TransformationKind::Weak;

  bool operator==(const DegTransformation&) const = default;
};

/// component_boundary, naturality (f), composition (A,B), unit and, for the
/// weak kind, invertible (A). Throws StructuralError for non-parallel
/// functors or a wrong number of components.
ValidationReport check_deg_transformation(const DegTransformation& t);

/// Distinguished object I, components l⁻¹_{FA} ∘ r_{FA}: FA⊗I -> I⊗FA.
DegTransformation identity_deg_transformation(const MonoidalFunctor& f);

/// Distinguished object β⊗α for t1: F => G (α) and t2: G => H (β); the
/// components paste associators around t2 ⊗ 1 and 1 ⊗ t1. Both arguments must
/// have the same kind; throws PreconditionError otherwise.
DegTransformation compose_deg_transformations(const DegTransformation& t2,
                                              const DegTransformation& t1);

/// Γ: α -> β between transformations t, s: F => G, subject to
///   s_A ∘ (1 ⊗ Γ) = (Γ ⊗ 1) ∘ t_A          (weak, lax)
///   (1 ⊗ Γ) ∘ t_A = s_A ∘ (Γ ⊗ 1)          (oplax)
struct DegModification {
  DegTransformation source;
  DegTransformation target;
  Elem gamma = 0;

  bool operator==(const DegModification&) const = default;
};

/// gamma_boundary, square (A).
ValidationReport check_deg_modification(const DegModification& m);

/// Oplax transformation with distinguished object I and components
/// r⁻¹_{GA} ∘ θ_A ∘ l_{FA}: I⊗FA -> GA⊗I. Throws InvalidInput when θ fails
/// check_monoidal_transformation.
DegTransformation embed_monoidal_transformation(const MonoidalTransformation& theta);

/// An isomorphism a -> b in the underlying category, with its inverse.
std::optional<std::pair<Elem, Elem>> find_object_isomorphism(const FinMonoidalCategory& m,
                                                             Elem a, Elem b);

/// Two transformations with distinguished object I whose composite has
/// distinguished object I⊗I != I.
struct ClosureFailure {
  DegTransformation first;
  DegTransformation second;
  DegTransformation composite;
};
std::optional<ClosureFailure> find_unit_closure_failure(const FinMonoidalCategory& m);

/// Compares embed(θ2 ∘ θ1) with embed(θ2) ∘ embed(θ1).
struct EmbedComparison {
  DegTransformation of_composite;
  DegTransformation composite_of_images;
  bool same_dist = false;
  bool same_components = false;
};
EmbedComparison compare_embed_composite(const MonoidalTransformation& t2,
                                        const MonoidalTransformation& t1);

// ---------------------------------------------------------------------------
// The bicategory reading

/// A bicategory with one 0-cell. 1-cells are 0..one_cells-1; 2-cells carry
/// source and target 1-cells. hcomp_1 composes 1-cells, hcomp_2 2-cells
/// horizontally; the constraints are indexed like their monoidal
/// counterparts.
struct DegenerateBicategory {
  std::string zero_cell = "∗";
  std::size_t one_cells = 0;
  std::vector<CellBoundary> two_cells;
  std::vector<Elem> id2;
  std::vector<std::vector<Elem>> vcomp;
  std::vector<std::vector<Elem>> hcomp_1;
  std::vector<std::vector<Elem>> hcomp_2;
  Elem unit_1cell = 0;
  std::vector<Elem> assoc;
  std::vector<Elem> assoc_inv;
  std::vector<Elem> lunit;
  std::vector<Elem> lunit_inv;
  std::vector<Elem> runit;
  std::vector<Elem> runit_inv;

  bool operator==(const DegenerateBicategory&) const = default;
};

/// 1-cells become objects, 2-cells morphisms, ∗ becomes ⊗.
FinMonoidalCategory shift_from_bicat(const DegenerateBicategory& b);
DegenerateBicategory shift_to_bicat(const FinMonoidalCategory& m);
ValidationReport check_degenerate_bicategory(const DegenerateBicategory& b);

/// A weak functor of bicategories with one 0-cell: φ_{f,g}: Ff∗Fg => F(f∗g)
/// and φ_∗: I => F(I).
struct BicatFunctor {
  DegenerateBicategory source;
  DegenerateBicategory target;
  std::vector<Elem> on_1cells;
  std::vector<Elem> on_2cells;
  std::vector<Elem> comp_constraint;
  Elem unit_constraint = 0;

  bool operator==(const BicatFunctor&) const = default;
};

/// The weak functor axioms written against the bicategory tables.
ValidationReport check_bicat_functor(const BicatFunctor& f);
std::vector<BicatFunctor> enumerate_bicat_functors(const DegenerateBicategory& source,
                                                   const DegenerateBicategory& target);
MonoidalFunctor xi(const BicatFunctor& f);

/// ξ over the stock instances with at most `bound` objects: the functors on
/// each side are enumerated independently, then compared hom-set by hom-set
/// and handed to the equivalence engine.
EquivalenceReport check_xi_equivalence(std::size_t bound);

}  // namespace deglab

#endif  // DEGLAB_MONOIDAL_HPP
