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

// Monads on finite categories, monad functors (U, φ: TU => US) and their
// transformations.

#ifndef DEGLAB_MONAD_HPP
#define DEGLAB_MONAD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "deglab/finite_category.hpp"

namespace deglab {

/// T: C -> C with η_A: A -> TA and μ_A: TTA -> TA.
struct FinMonad {
  FinFunctor T;
  std::vector<Elem> eta;
  std::vector<Elem> mu;

  const FiniteCategory& base() const noexcept { return T.source; }
  bool operator==(const FinMonad&) const = default;
};

/// base.* (category laws), functor.*, eta_boundary, mu_boundary,
/// eta_naturality, mu_naturality, left_unit (μ∘ηT), right_unit (μ∘Tη),
/// associativity (μ∘Tμ = μ∘μT).
ValidationReport check_monad(const FinMonad& m);
FinMonad identity_monad(const FiniteCategory& c);
/// On the arrow category 0 -> 1: everything goes to the terminal object 1.
FinMonad terminal_object_monad();

/// (U, φ): (C, S) -> (D, T) with U: C -> D and φ_A: TUA -> USA.
struct MonadFunctor {
  FinMonad source;  // S on C
  FinMonad target;  // T on D
  FinFunctor U;
  std::vector<Elem> phi;

  bool operator==(const MonadFunctor&) const = default;
};

/// U.*, phi_boundary, phi_naturality, unit (φ∘ηU = Uη),
/// multiplication (φ∘μU = Uμ∘φS∘Tφ).
ValidationReport check_monad_functor(const MonadFunctor& f);
MonadFunctor identity_monad_functor(const FinMonad& m);
/// (VU, Vφ ∘ χU).
MonadFunctor compose_monad_functors(const MonadFunctor& g, const MonadFunctor& f);

/// Γ: U => U' with φ'∘TΓ = ΓS∘φ.
struct MonadFunctorTransformation {
  MonadFunctor source;
  MonadFunctor target;
  std::vector<Elem> gamma;

  bool operator==(const MonadFunctorTransformation&) const = default;
};

/// gamma_boundary, gamma_naturality, square.
ValidationReport check_monad_transformation(const MonadFunctorTransformation& t);
MonadFunctorTransformation identity_monad_transformation(const MonadFunctor& f);
MonadFunctorTransformation compose_monad_transformations(const MonadFunctorTransformation& t2,
                                                         const MonadFunctorTransformation& t1);

/// One comparison between a one-object-category verdict and the matching
/// monad-side verdict.
struct CollapseCase {
  std::string kind;  // "monoid", "hom" or "nat_trans"
  bool degenerate_verdict = false;
  bool monad_verdict = false;
  /// Raw tables ({"mul", "unit"}) and maps the verdicts were computed from.
  nlohmann::json data;

  bool agrees() const { return degenerate_verdict == monad_verdict; }
};

/// On one-object categories: the identity monad is a monad iff the table is a
/// monoid; (U, 1) is a monad functor between identity monads iff U is a
/// monoid hom; Γ = d is a transformation iff d·Fx = Gx·d. Generates `count`
/// cases from `seed`, mixing valid and invalid data.
std::vector<CollapseCase> terminal_collapse_cases(std::size_t count, std::uint64_t seed);

}  // namespace deglab

#endif  // DEGLAB_MONAD_HPP
