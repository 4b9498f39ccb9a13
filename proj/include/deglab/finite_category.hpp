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

// Finite categories given by explicit tables, functors between them and
// natural transformations.

#ifndef DEGLAB_FINITE_CATEGORY_HPP
#define DEGLAB_FINITE_CATEGORY_HPP

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deglab/equivalence.hpp"
#include "deglab/report.hpp"

namespace deglab {

/// Objects are 0..objects-1. comp[g][f] is g∘f, kUndefined when tgt(f) !=
/// src(g).
struct FiniteCategory {
  std::size_t objects = 0;
  std::vector<CellBoundary> morphisms;
  std::vector<Elem> identities;
  std::vector<std::vector<Elem>> comp;

  std::size_t morphism_count() const noexcept { return morphisms.size(); }
  Elem src(Elem f) const { return morphisms[f].src; }
  Elem tgt(Elem f) const { return morphisms[f].tgt; }
  Elem id(Elem a) const { return identities[a]; }
  /// g∘f; throws StructuralError when the pair is not composable or the
  /// table has no entry.
  Elem c(Elem g, Elem f) const;
  /// Left-to-right list of composites: c({h, g, f}) = h∘g∘f.
  Elem c(std::initializer_list<Elem> chain) const;
  std::vector<Elem> hom(Elem a, Elem b) const;

  bool operator==(const FiniteCategory&) const = default;
};

/// Shapes and ranges; throws StructuralError with a pointer on failure.
void check_category_shape(const FiniteCategory& c);

/// Identity and associativity laws, composition defined exactly on
/// composable pairs with the right boundary. Calls check_category_shape.
ValidationReport check_category(const FiniteCategory& c);

/// The inverse of f when one exists.
std::optional<Elem> inverse_morphism(const FiniteCategory& c, Elem f);
/// Some isomorphism a -> b with its inverse, by exhaustive search.
std::optional<std::pair<Elem, Elem>> find_isomorphism(const FiniteCategory& c, Elem a, Elem b);

FiniteCategory terminal_category();
FiniteCategory discrete_category(std::size_t n);
/// Exactly one morphism between any two objects; (a, b) has index a*n + b.
FiniteCategory indiscrete_category(std::size_t n);
/// 0 -> 1: identities 0 and 1, the arrow is morphism 2.
FiniteCategory arrow_category();
/// The one-object category of a monoid table; morphism x is the element x.
FiniteCategory one_object_category(const std::vector<std::vector<Elem>>& table, Elem unit);

struct FinFunctor {
  FiniteCategory source;
  FiniteCategory target;
  std::vector<Elem> on_objects;
  std::vector<Elem> on_morphisms;

  Elem obj(Elem a) const { return on_objects[a]; }
  Elem operator()(Elem f) const { return on_morphisms[f]; }
  bool operator==(const FinFunctor&) const = default;
};

/// Map lengths and ranges; throws StructuralError.
void check_functor_shape(const FinFunctor& f);
/// preserves_boundary, preserves_identity, preserves_composition.
ValidationReport check_functor(const FinFunctor& f);
FinFunctor identity_functor(const FiniteCategory& c);
/// g∘f; throws PreconditionError when f.target != g.source.
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);
/// Every functor source -> target, by backtracking over object maps and hom
/// sets.
std::vector<FinFunctor> enumerate_functors(const FiniteCategory& source,
                                           const FiniteCategory& target);

/// Components θ_a: F a -> G a.
struct FinNatTrans {
  FinFunctor source;
  FinFunctor target;
  std::vector<Elem> components;

  bool operator==(const FinNatTrans&) const = default;
};

/// component_boundary, naturality (G f ∘ θ_a = θ_b ∘ F f).
ValidationReport check_nat_trans(const FinNatTrans& t);
FinNatTrans identity_nat_trans(const FinFunctor& f);
/// Vertical composite t2 ∘ t1.
FinNatTrans vcompose(const FinNatTrans& t2, const FinNatTrans& t1);
/// Whiskerings H θ and θ K.
FinNatTrans whisker_left(const FinFunctor& h, const FinNatTrans& t);
FinNatTrans whisker_right(const FinNatTrans& t, const FinFunctor& k);

}  // namespace deglab

#endif  // DEGLAB_FINITE_CATEGORY_HPP
