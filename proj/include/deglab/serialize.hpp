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

// JSON documents. Every document is an object with a "kind" key; nested
// structures are themselves documents. Readers reject unknown keys, wrong
// types and out-of-range indices with a StructuralError whose pointer names
// the offending key. Undefined composites are written as null.

#ifndef DEGLAB_SERIALIZE_HPP
#define DEGLAB_SERIALIZE_HPP

#include <string>

#include "deglab/algebra.hpp"
#include "deglab/degenerate_cat.hpp"
#include "deglab/doubly_degenerate.hpp"
#include "deglab/finite_category.hpp"
#include "deglab/monad.hpp"
#include "deglab/monoidal.hpp"

namespace deglab {

using nlohmann::json;

/// Compact, keys sorted, one trailing LF.
std::string canonical_dump(const json& doc);
/// Throws StructuralError on malformed JSON.
json parse_document(const std::string& text);
/// The "kind" string; throws StructuralError when absent.
std::string document_kind(const json& doc);

json to_document(const FiniteMonoid& m);
json to_document(const CMonDIE& s);
json to_document(const MonoidHom& h);
json to_document(const DegenerateCategory& c);
json to_document(const DegNatTrans& t);
json to_document(const DDBicat& b);
json to_document(const DDFunctor& f);
json to_document(const DDTransformation& t);
json to_document(const DDModification& m);
json to_document(const FiniteCategory& c);
json to_document(const FinFunctor& f);
json to_document(const FinNatTrans& t);
json to_document(const FinMonoidalCategory& m);
json to_document(const MonoidalFunctor& f);
json to_document(const MonoidalTransformation& t);
json to_document(const DegTransformation& t);
json to_document(const DegModification& m);
json to_document(const DegenerateBicategory& b);
json to_document(const BicatFunctor& f);
json to_document(const FinMonad& m);
json to_document(const MonadFunctor& f);
json to_document(const MonadFunctorTransformation& t);

/// Raw weak-functor data between two doubly degenerate bicategories, as taken
/// by analyze_weak_functor and promote_lax.
struct WeakFunctorData {
  DDBicat source;
  DDBicat target;
  std::vector<Elem> map;
  Elem m2 = 0;
  Elem m0 = 0;
};
json to_document(const WeakFunctorData& w);

FiniteMonoid read_monoid(const json& doc, const std::string& at = "");
CMonDIE read_cmon_die(const json& doc, const std::string& at = "");
MonoidHom read_monoid_hom(const json& doc, const std::string& at = "");
DegenerateCategory read_degenerate_category(const json& doc, const std::string& at = "");
DegNatTrans read_nat_trans(const json& doc, const std::string& at = "");
DDBicat read_ddbicat(const json& doc, const std::string& at = "");
DDFunctor read_dd_functor(const json& doc, const std::string& at = "");
DDTransformation read_dd_transformation(const json& doc, const std::string& at = "");
DDModification read_dd_modification(const json& doc, const std::string& at = "");
WeakFunctorData read_weak_functor(const json& doc, const std::string& at = "");
FiniteCategory read_category(const json& doc, const std::string& at = "");
FinFunctor read_functor(const json& doc, const std::string& at = "");
FinNatTrans read_natural_transformation(const json& doc, const std::string& at = "");
FinMonoidalCategory read_moncat(const json& doc, const std::string& at = "");
MonoidalFunctor read_monoidal_functor(const json& doc, const std::string& at = "");
MonoidalTransformation read_monoidal_transformation(const json& doc, const std::string& at = "");
DegTransformation read_deg_transformation(const json& doc, const std::string& at = "");
DegModification read_deg_modification(const json& doc, const std::string& at = "");
DegenerateBicategory read_degenerate_bicategory(const json& doc, const std::string& at = "");
BicatFunctor read_bicat_functor(const json& doc, const std::string& at = "");
FinMonad read_monad(const json& doc, const std::string& at = "");
MonadFunctor read_monad_functor(const json& doc, const std::string& at = "");
MonadFunctorTransformation read_monad_transformation(const json& doc, const std::string& at = "");

}  // namespace deglab

#endif  // DEGLAB_SERIALIZE_HPP
