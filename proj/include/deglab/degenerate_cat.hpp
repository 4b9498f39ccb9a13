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

// One-object categories and their identification with monoids.

#ifndef DEGLAB_DEGENERATE_CAT_HPP
#define DEGLAB_DEGENERATE_CAT_HPP

#include <optional>
#include <string>
#include <vector>

#include "deglab/algebra.hpp"
#include "deglab/equivalence.hpp"

namespace deglab {

inline constexpr const char* kSingleObject = "∗";

/// A category with the single object ∗; its morphisms compose as `hom`.
struct DegenerateCategory {
  std::string object_label = kSingleObject;
  FiniteMonoid hom;

  bool operator==(const DegenerateCategory&) const = default;
};

/// Identity and associativity of composition, plus the fixed object label.
ValidationReport check_degenerate_category(const DegenerateCategory& c);

FiniteMonoid cat_to_monoid(const DegenerateCategory& c);

/// Throws InvalidInput when `m` fails check_monoid.
DegenerateCategory monoid_to_cat(const FiniteMonoid& m);

/// A functor between one-object categories: the object map is forced, so
/// only the action on morphisms is stored.
struct DegFunctor {
  DegenerateCategory source;
  DegenerateCategory target;
  std::vector<Elem> on_morphisms;

  bool operator==(const DegFunctor&) const = default;
};

/// Functor laws in category terms: identity morphism and composites preserved.
ValidationReport check_deg_functor(const DegFunctor& f);

/// φ₁ on morphisms: forgets the object.
MonoidHom functor_to_hom(const DegFunctor& f);

/// Every functor source -> target (brute force over morphism maps).
std::vector<DegFunctor> enumerate_deg_functors(const DegenerateCategory& source,
                                               const DegenerateCategory& target);

/// A natural transformation F => G between functors of one-object
/// categories: the single component d, subject to d·Fx = Gx·d.
struct DegNatTrans {
  MonoidHom F;
  MonoidHom G;
  Elem d = 0;
};

/// Throws StructuralError when F and G do not share source and target.
ValidationReport check_nat_trans(const DegNatTrans& t);

/// An endo-transformation of the identity functor whose component is a
/// central non-unit element, when one exists.
std::optional<DegNatTrans> find_nonidentity_nat_trans(const FiniteMonoid& m);

/// φ₁ over a finite sample: checks that it is full, faithful and surjective on
/// the nose against all monoids (enumerate_monoids) of every size the sample
/// represents, and runs the external-equivalence engine on the same data.
EquivalenceReport phi1_check(const std::vector<DegenerateCategory>& sample);

}  // namespace deglab

#endif  // DEGLAB_DEGENERATE_CAT_HPP
