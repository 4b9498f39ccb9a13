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

// Oracle models read straight from the raw tables of library structures.

#ifndef DEGLAB_TESTS_MODELS_HPP
#define DEGLAB_TESTS_MODELS_HPP

#include <memory>

#include "deglab/doubly_degenerate.hpp"
#include "deglab/monoidal.hpp"
#include "oracle.hpp"

namespace oracle {

inline Model model_of(const deglab::FinMonoidalCategory& source) {
  auto m = std::make_shared<const deglab::FinMonoidalCategory>(source);
  const std::size_t n = m->base.objects;
  Model out;
  out.objects = n;
  out.unit = m->unit;
  out.tensor_obj = [m](Elem a, Elem b) { return m->tensor_obj[a][b]; };
  out.identity = [m](Elem a) { return m->base.identities[a]; };
  out.assoc = [m, n](Elem a, Elem b, Elem c) { return m->assoc[(a * n + b) * n + c]; };
  out.lunit = [m](Elem a) { return m->lunit[a]; };
  out.runit = [m](Elem a) { return m->runit[a]; };
  out.tensor_mor = [m](Elem f, Elem g) { return m->tensor_mor[f][g]; };
  out.compose = [m](Elem g, Elem f) { return m->base.comp[g][f]; };
  out.src = [m](Elem f) { return m->base.morphisms[f].src; };
  out.tgt = [m](Elem f) { return m->base.morphisms[f].tgt; };
  return out;
}

/// One object, ⊗ = ∗, composition = ∘. The monoidal left unitor I⊗A -> A is
/// natural in the right factor, so it reads the bicategory's `runit`.
inline Model model_of(const deglab::DDBicat& source) {
  auto b = std::make_shared<const deglab::DDBicat>(source);
  Model out;
  out.objects = 1;
  out.unit = 0;
  out.tensor_obj = [](Elem, Elem) { return Elem{0}; };
  out.identity = [b](Elem) { return b->id2; };
  out.assoc = [b](Elem, Elem, Elem) { return b->assoc; };
  out.lunit = [b](Elem) { return b->runit; };
  out.runit = [b](Elem) { return b->lunit; };
  out.tensor_mor = [b](Elem f, Elem g) { return b->hcomp(f, g); };
  out.compose = [b](Elem g, Elem f) { return b->vcomp(g, f); };
  out.src = [](Elem) { return Elem{0}; };
  out.tgt = [](Elem) { return Elem{0}; };
  return out;
}

}  // namespace oracle

#endif  // DEGLAB_TESTS_MODELS_HPP
