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

#include "deglab/serialize.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <string_view>

namespace deglab {

namespace {

constexpr std::size_t kAny = std::numeric_limits<std::size_t>::max();

Elem as_index(const json& v, const std::string& at, std::size_t bound, bool allow_null = false) {
  if (allow_null && v.is_null()) return kUndefined;
  if (!v.is_number_integer()) throw StructuralError("expected a non-negative integer", at);
  if (v.is_number_unsigned()) {
    const auto x = v.get<std::uint64_t>();
    if (x >= bound) throw StructuralError("index out of range", at);
    return static_cast<Elem>(x);
  }
  const auto x = v.get<std::int64_t>();
  if (x < 0) throw StructuralError("expected a non-negative integer", at);
  if (static_cast<std::uint64_t>(x) >= bound) throw StructuralError("index out of range", at);
  return static_cast<Elem>(x);
}

/// Strict view of one document object.
class Fields {
 public:
  Fields(const json& doc, std::string at, std::string_view kind,
         std::initializer_list<std::string_view> keys)
      : doc_(doc), at_(std::move(at)) {
    if (!doc.is_object()) throw StructuralError("expected an object", at_);
    auto k = doc.find("kind");
    if (k == doc.end()) throw StructuralError("missing key", at_ + "/kind");
    if (!k->is_string() || k->get<std::string>() != kind) {
      throw StructuralError("expected kind \"" + std::string(kind) + "\"", at_ + "/kind");
    }
    for (const auto& item : doc.items()) {
      if (item.key() == "kind") continue;
      if (std::find(keys.begin(), keys.end(), item.key()) == keys.end()) {
        throw StructuralError("unknown key", ptr(item.key()));
      }
    }
  }

  std::string ptr(const std::string& key) const { return at_ + "/" + key; }
  bool has(const std::string& key) const { return doc_.contains(key); }

  const json& need(const std::string& key) const {
    auto it = doc_.find(key);
    if (it == doc_.end()) throw StructuralError("missing key", ptr(key));
    return *it;
  }

  Elem index(const std::string& key, std::size_t bound = kAny) const {
    return as_index(need(key), ptr(key), bound);
  }

  std::string string(const std::string& key) const {
    const json& v = need(key);
    if (!v.is_string()) throw StructuralError("expected a string", ptr(key));
    return v.get<std::string>();
  }

  std::vector<Elem> list(const std::string& key, std::size_t length, std::size_t bound) const {
    const json& v = need(key);
    const std::string at = ptr(key);
    if (!v.is_array()) throw StructuralError("expected an array", at);
    if (length != kAny && v.size() != length) {
      throw StructuralError("expected " + std::to_string(length) + " entries", at);
    }
    std::vector<Elem> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_index(v[i], at + "/" + std::to_string(i), bound));
    return out;
  }

  std::vector<std::vector<Elem>> table(const std::string& key, std::size_t rows, std::size_t cols,
                                       std::size_t bound, bool nulls = false) const {
    const json& v = need(key);
    const std::string at = ptr(key);
    if (!v.is_array()) throw StructuralError("expected an array", at);
    if (v.size() != rows) throw StructuralError("expected " + std::to_string(rows) + " rows", at);
    std::vector<std::vector<Elem>> out(rows);
    for (std::size_t i = 0; i < rows; ++i) {
      const std::string row_at = at + "/" + std::to_string(i);
      if (!v[i].is_array()) throw StructuralError("expected an array", row_at);
      if (v[i].size() != cols) throw StructuralError("expected " + std::to_string(cols) + " entries", row_at);
      for (std::size_t j = 0; j < cols; ++j)
        out[i].push_back(as_index(v[i][j], row_at + "/" + std::to_string(j), bound, nulls));
    }
    return out;
  }

  std::vector<CellBoundary> boundaries(const std::string& key, std::size_t bound) const {
    const json& v = need(key);
    const std::string at = ptr(key);
    if (!v.is_array()) throw StructuralError("expected an array", at);
    std::vector<CellBoundary> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string cell_at = at + "/" + std::to_string(i);
      const json& c = v[i];
      if (!c.is_object()) throw StructuralError("expected an object", cell_at);
      for (const auto& item : c.items())
        if (item.key() != "src" && item.key() != "tgt") throw StructuralError("unknown key", cell_at + "/" + item.key());
      if (!c.contains("src")) throw StructuralError("missing key", cell_at + "/src");
      if (!c.contains("tgt")) throw StructuralError("missing key", cell_at + "/tgt");
      out.push_back({as_index(c["src"], cell_at + "/src", bound), as_index(c["tgt"], cell_at + "/tgt", bound)});
    }
    return out;
  }

 private:
  const json& doc_;
  std::string at_;
};

json table_json(const std::vector<std::vector<Elem>>& t) {
  json out = json::array();
  for (const auto& row : t) {
    json r = json::array();
    for (Elem x : row) r.push_back(x == kUndefined ? json(nullptr) : json(x));
    out.push_back(std::move(r));
  }
  return out;
}

json boundaries_json(const std::vector<CellBoundary>& cells) {
  json out = json::array();
  for (const auto& c : cells) out.push_back({{"src", c.src}, {"tgt", c.tgt}});
  return out;
}

std::vector<std::vector<Elem>> rows_of(const CayleyTable& t) { return t.rows(); }

void monoid_fields(json& j, const FiniteMonoid& m) {
  j["size"] = m.size();
  j["unit"] = m.unit();
  j["mul"] = table_json(rows_of(m.table()));
}

FiniteMonoid monoid_from(const Fields& f) {
  const std::size_t n = f.index("size");
  if (n == 0) throw StructuralError("size must be positive", f.ptr("size"));
  auto rows = f.table("mul", n, n, n);
  return FiniteMonoid(rows, f.index("unit", n));
}

void category_fields(json& j, const FiniteCategory& c) {
  j["objects"] = c.objects;
  j["morphisms"] = boundaries_json(c.morphisms);
  j["identities"] = c.identities;
  j["comp"] = table_json(c.comp);
}

FiniteCategory category_from(const Fields& f) {
  FiniteCategory c;
  c.objects = f.index("objects");
  c.morphisms = f.boundaries("morphisms", c.objects);
  const std::size_t m = c.morphisms.size();
  c.identities = f.list("identities", c.objects, m);
  c.comp = f.table("comp", m, m, m, true);
  return c;
}

}  // namespace

std::string canonical_dump(const json& doc) { return doc.dump() + "\n"; }

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw StructuralError(std::string("malformed JSON: ") + e.what());
  }
}

std::string document_kind(const json& doc) {
  if (!doc.is_object()) throw StructuralError("expected an object", "");
  auto k = doc.find("kind");
  if (k == doc.end()) throw StructuralError("missing key", "/kind");
  if (!k->is_string()) throw StructuralError("expected a string", "/kind");
  return k->get<std::string>();
}

// ---------------------------------------------------------------------------
// Writers

json to_document(const FiniteMonoid& m) {
  json j = {{"kind", "monoid"}};
  monoid_fields(j, m);
  return j;
}

json to_document(const CMonDIE& s) {
  json j = {{"kind", "cmon_die"}, {"die", s.die}};
  monoid_fields(j, s.monoid);
  std::optional<Elem> inv = s.die_inv;
  if (!inv && s.die < s.monoid.size()) inv = invert(s.monoid, s.die);
  if (inv) j["die_inv"] = *inv;
  return j;
}

json to_document(const MonoidHom& h) {
  return {{"kind", "monoid_hom"}, {"source", to_document(h.source)}, {"target", to_document(h.target)},
          {"map", h.map}};
}

json to_document(const DegenerateCategory& c) {
  json j = {{"kind", "degenerate_category"}, {"hom", to_document(c.hom)}};
  if (c.object_label != kSingleObject) j["object"] = c.object_label;
  return j;
}

json to_document(const DegNatTrans& t) {
  return {{"kind", "nat_trans"}, {"source", to_document(t.F.source)}, {"target", to_document(t.F.target)},
          {"F", t.F.map}, {"G", t.G.map}, {"d", t.d}};
}

json to_document(const DDBicat& b) {
  return {{"kind", "ddbicat"},          {"cells", b.cells()},
          {"id2", b.id2},               {"vcomp", table_json(rows_of(b.vcomp))},
          {"hcomp", table_json(rows_of(b.hcomp))}, {"assoc", b.assoc},
          {"assoc_inv", b.assoc_inv},   {"lunit", b.lunit},
          {"lunit_inv", b.lunit_inv},   {"runit", b.runit},
          {"runit_inv", b.runit_inv}};
}

json to_document(const DDFunctor& f) {
  return {{"kind", "dd_functor"}, {"source", to_document(f.source)}, {"target", to_document(f.target)},
          {"map", f.map},         {"m2", f.m2},                      {"m0", f.m0}};
}

json to_document(const DDTransformation& t) {
  return {{"kind", "dd_transformation"}, {"source", to_document(t.source)}, {"target", to_document(t.target)},
          {"sigma", t.sigma}};
}

json to_document(const DDModification& m) {
  return {{"kind", "dd_modification"}, {"boundary", to_document(m.boundary)}, {"gamma", m.gamma}};
}

json to_document(const WeakFunctorData& w) {
  return {{"kind", "weak_functor"}, {"source", to_document(w.source)}, {"target", to_document(w.target)},
          {"map", w.map},           {"m2", w.m2},                      {"m0", w.m0}};
}

json to_document(const FiniteCategory& c) {
  json j = {{"kind", "category"}};
  category_fields(j, c);
  return j;
}

json to_document(const FinFunctor& f) {
  return {{"kind", "functor"}, {"source", to_document(f.source)}, {"target", to_document(f.target)},
          {"on_objects", f.on_objects}, {"on_morphisms", f.on_morphisms}};
}

json to_document(const FinNatTrans& t) {
  return {{"kind", "natural_transformation"}, {"source", to_document(t.source)},
          {"target", to_document(t.target)}, {"components", t.components}};
}

json to_document(const FinMonoidalCategory& m) {
  json j = {{"kind", "moncat"}};
  category_fields(j, m.base);
  j["tensor_obj"] = table_json(m.tensor_obj);
  j["tensor_mor"] = table_json(m.tensor_mor);
  j["unit"] = m.unit;
  j["assoc"] = m.assoc;
  j["assoc_inv"] = m.assoc_inv;
  j["lunit"] = m.lunit;
  j["lunit_inv"] = m.lunit_inv;
  j["runit"] = m.runit;
  j["runit_inv"] = m.runit_inv;
  return j;
}

json to_document(const MonoidalFunctor& f) {
  return {{"kind", "monoidal_functor"}, {"source", to_document(f.source)},
          {"target", to_document(f.target)}, {"on_objects", f.on_objects},
          {"on_morphisms", f.on_morphisms}, {"phi", f.phi}, {"phi0", f.phi0}};
}

json to_document(const MonoidalTransformation& t) {
  return {{"kind", "monoidal_transformation"}, {"source", to_document(t.source)},
          {"target", to_document(t.target)}, {"components", t.components}};
}

json to_document(const DegTransformation& t) {
  return {{"kind", "deg_transformation"}, {"source", to_document(t.source)},
          {"target", to_document(t.target)}, {"dist", t.dist},
          {"components", t.components}, {"variant", to_string(t.kind)}};
}

json to_document(const DegModification& m) {
  return {{"kind", "deg_modification"}, {"source", to_document(m.source)},
          {"target", to_document(m.target)}, {"gamma", m.gamma}};
}

json to_document(const DegenerateBicategory& b) {
  return {{"kind", "degenerate_bicategory"},
          {"zero_cell", b.zero_cell},
          {"one_cells", b.one_cells},
          {"two_cells", boundaries_json(b.two_cells)},
          {"id2", b.id2},
          {"vcomp", table_json(b.vcomp)},
          {"hcomp_1", table_json(b.hcomp_1)},
          {"hcomp_2", table_json(b.hcomp_2)},
          {"unit_1cell", b.unit_1cell},
          {"assoc", b.assoc},
          {"assoc_inv", b.assoc_inv},
          {"lunit", b.lunit},
          {"lunit_inv", b.lunit_inv},
          {"runit", b.runit},
          {"runit_inv", b.runit_inv}};
}

json to_document(const BicatFunctor& f) {
  return {{"kind", "bicat_functor"},
          {"source", to_document(f.source)},
          {"target", to_document(f.target)},
          {"on_1cells", f.on_1cells},
          {"on_2cells", f.on_2cells},
          {"comp_constraint", f.comp_constraint},
          {"unit_constraint", f.unit_constraint}};
}

json to_document(const FinMonad& m) {
  return {{"kind", "monad"}, {"category", to_document(m.base())}, {"on_objects", m.T.on_objects},
          {"on_morphisms", m.T.on_morphisms}, {"eta", m.eta}, {"mu", m.mu}};
}

json to_document(const MonadFunctor& f) {
  return {{"kind", "monad_functor"}, {"source", to_document(f.source)}, {"target", to_document(f.target)},
          {"on_objects", f.U.on_objects}, {"on_morphisms", f.U.on_morphisms}, {"phi", f.phi}};
}

json to_document(const MonadFunctorTransformation& t) {
  return {{"kind", "monad_transformation"}, {"source", to_document(t.source)},
          {"target", to_document(t.target)}, {"gamma", t.gamma}};
}

// ---------------------------------------------------------------------------
// Readers

FiniteMonoid read_monoid(const json& doc, const std::string& at) {
  Fields f(doc, at, "monoid", {"size", "unit", "mul"});
  return monoid_from(f);
}

CMonDIE read_cmon_die(const json& doc, const std::string& at) {
  Fields f(doc, at, "cmon_die", {"size", "unit", "mul", "die", "die_inv"});
  CMonDIE s;
  s.monoid = monoid_from(f);
  s.die = f.index("die", s.monoid.size());
  if (f.has("die_inv")) s.die_inv = f.index("die_inv", s.monoid.size());
  return s;
}

MonoidHom read_monoid_hom(const json& doc, const std::string& at) {
  Fields f(doc, at, "monoid_hom", {"source", "target", "map"});
  MonoidHom h;
  h.source = read_monoid(f.need("source"), f.ptr("source"));
  h.target = read_monoid(f.need("target"), f.ptr("target"));
  h.map = f.list("map", h.source.size(), h.target.size());
  return h;
}

DegenerateCategory read_degenerate_category(const json& doc, const std::string& at) {
  Fields f(doc, at, "degenerate_category", {"hom", "object"});
  DegenerateCategory c;
  c.hom = read_monoid(f.need("hom"), f.ptr("hom"));
  if (f.has("object")) c.object_label = f.string("object");
  return c;
}

DegNatTrans read_nat_trans(const json& doc, const std::string& at) {
  Fields f(doc, at, "nat_trans", {"source", "target", "F", "G", "d"});
  FiniteMonoid s = read_monoid(f.need("source"), f.ptr("source"));
  FiniteMonoid t = read_monoid(f.need("target"), f.ptr("target"));
  DegNatTrans out;
  out.F = {s, t, f.list("F", s.size(), t.size())};
  out.G = {s, t, f.list("G", s.size(), t.size())};
  out.d = f.index("d", t.size());
  return out;
}

DDBicat read_ddbicat(const json& doc, const std::string& at) {
  Fields f(doc, at, "ddbicat",
           {"cells", "id2", "vcomp", "hcomp", "assoc", "assoc_inv", "lunit", "lunit_inv", "runit",
            "runit_inv"});
  const std::size_t n = f.index("cells");
  if (n == 0) throw StructuralError("cells must be positive", f.ptr("cells"));
  DDBicat b;
  b.vcomp = CayleyTable(f.table("vcomp", n, n, n));
  b.hcomp = CayleyTable(f.table("hcomp", n, n, n));
  b.id2 = f.index("id2", n);
  b.assoc = f.index("assoc", n);
  b.assoc_inv = f.index("assoc_inv", n);
  b.lunit = f.index("lunit", n);
  b.lunit_inv = f.index("lunit_inv", n);
  b.runit = f.index("runit", n);
  b.runit_inv = f.index("runit_inv", n);
  return b;
}

DDFunctor read_dd_functor(const json& doc, const std::string& at) {
  Fields f(doc, at, "dd_functor", {"source", "target", "map", "m2", "m0"});
  DDFunctor out;
  out.source = read_cmon_die(f.need("source"), f.ptr("source"));
  out.target = read_cmon_die(f.need("target"), f.ptr("target"));
  const std::size_t n = out.target.monoid.size();
  out.map = f.list("map", out.source.monoid.size(), n);
  out.m2 = f.index("m2", n);
  out.m0 = f.index("m0", n);
  return out;
}

DDTransformation read_dd_transformation(const json& doc, const std::string& at) {
  Fields f(doc, at, "dd_transformation", {"source", "target", "sigma"});
  DDTransformation t;
  t.source = read_dd_functor(f.need("source"), f.ptr("source"));
  t.target = read_dd_functor(f.need("target"), f.ptr("target"));
  t.sigma = f.index("sigma", t.source.target.monoid.size());
  return t;
}

DDModification read_dd_modification(const json& doc, const std::string& at) {
  Fields f(doc, at, "dd_modification", {"boundary", "gamma"});
  DDModification m;
  m.boundary = read_dd_transformation(f.need("boundary"), f.ptr("boundary"));
  m.gamma = f.index("gamma", m.boundary.source.target.monoid.size());
  return m;
}

WeakFunctorData read_weak_functor(const json& doc, const std::string& at) {
  Fields f(doc, at, "weak_functor", {"source", "target", "map", "m2", "m0"});
  WeakFunctorData w;
  w.source = read_ddbicat(f.need("source"), f.ptr("source"));
  w.target = read_ddbicat(f.need("target"), f.ptr("target"));
  const std::size_t n = w.target.cells();
  w.map = f.list("map", w.source.cells(), n);
  w.m2 = f.index("m2", n);
  w.m0 = f.index("m0", n);
  return w;
}

FiniteCategory read_category(const json& doc, const std::string& at) {
  Fields f(doc, at, "category", {"objects", "morphisms", "identities", "comp"});
  FiniteCategory c = category_from(f);
  check_category_shape(c);
  return c;
}

FinFunctor read_functor(const json& doc, const std::string& at) {
  Fields f(doc, at, "functor", {"source", "target", "on_objects", "on_morphisms"});
  FinFunctor out;
  out.source = read_category(f.need("source"), f.ptr("source"));
  out.target = read_category(f.need("target"), f.ptr("target"));
  out.on_objects = f.list("on_objects", out.source.objects, out.target.objects);
  out.on_morphisms = f.list("on_morphisms", out.source.morphism_count(), out.target.morphism_count());
  return out;
}

FinNatTrans read_natural_transformation(const json& doc, const std::string& at) {
  Fields f(doc, at, "natural_transformation", {"source", "target", "components"});
  FinNatTrans t;
  t.source = read_functor(f.need("source"), f.ptr("source"));
  t.target = read_functor(f.need("target"), f.ptr("target"));
  t.components = f.list("components", t.source.source.objects, t.source.target.morphism_count());
  return t;
}

FinMonoidalCategory read_moncat(const json& doc, const std::string& at) {
  Fields f(doc, at, "moncat",
           {"objects", "morphisms", "identities", "comp", "tensor_obj", "tensor_mor", "unit", "assoc",
            "assoc_inv", "lunit", "lunit_inv", "runit", "runit_inv"});
  FinMonoidalCategory m;
  m.base = category_from(f);
  const std::size_t n = m.base.objects;
  const std::size_t k = m.base.morphism_count();
  m.tensor_obj = f.table("tensor_obj", n, n, n);
  m.tensor_mor = f.table("tensor_mor", k, k, k);
  m.unit = f.index("unit", n);
  m.assoc = f.list("assoc", n * n * n, k);
  m.assoc_inv = f.list("assoc_inv", n * n * n, k);
  m.lunit = f.list("lunit", n, k);
  m.lunit_inv = f.list("lunit_inv", n, k);
  m.runit = f.list("runit", n, k);
  m.runit_inv = f.list("runit_inv", n, k);
  check_monoidal_shape(m);
  return m;
}

MonoidalFunctor read_monoidal_functor(const json& doc, const std::string& at) {
  Fields f(doc, at, "monoidal_functor", {"source", "target", "on_objects", "on_morphisms", "phi", "phi0"});
  MonoidalFunctor out;
  out.source = read_moncat(f.need("source"), f.ptr("source"));
  out.target = read_moncat(f.need("target"), f.ptr("target"));
  const std::size_t n = out.source.objects();
  const std::size_t k = out.target.morphisms();
  out.on_objects = f.list("on_objects", n, out.target.objects());
  out.on_morphisms = f.list("on_morphisms", out.source.morphisms(), k);
  out.phi = f.list("phi", n * n, k);
  out.phi0 = f.index("phi0", k);
  return out;
}

MonoidalTransformation read_monoidal_transformation(const json& doc, const std::string& at) {
  Fields f(doc, at, "monoidal_transformation", {"source", "target", "components"});
  MonoidalTransformation t;
  t.source = read_monoidal_functor(f.need("source"), f.ptr("source"));
  t.target = read_monoidal_functor(f.need("target"), f.ptr("target"));
  t.components = f.list("components", t.source.source.objects(), t.source.target.morphisms());
  return t;
}

DegTransformation read_deg_transformation(const json& doc, const std::string& at) {
  Fields f(doc, at, "deg_transformation", {"source", "target", "dist", "components", "variant"});
  DegTransformation t;
  t.source = read_monoidal_functor(f.need("source"), f.ptr("source"));
  t.target = read_monoidal_functor(f.need("target"), f.ptr("target"));
  t.dist = f.index("dist", t.source.target.objects());
  t.components = f.list("components", t.source.source.objects(), t.source.target.morphisms());
  try {
    t.kind = transformation_kind_from_string(f.string("variant"));
  } catch (const StructuralError&) {
    throw StructuralError("expected \"weak\", \"lax\" or \"oplax\"", f.ptr("variant"));
  }
  return t;
}

DegModification read_deg_modification(const json& doc, const std::string& at) {
  Fields f(doc, at, "deg_modification", {"source", "target", "gamma"});
  DegModification m;
  m.source = read_deg_transformation(f.need("source"), f.ptr("source"));
  m.target = read_deg_transformation(f.need("target"), f.ptr("target"));
  m.gamma = f.index("gamma", m.source.source.target.morphisms());
  return m;
}

DegenerateBicategory read_degenerate_bicategory(const json& doc, const std::string& at) {
  Fields f(doc, at, "degenerate_bicategory",
           {"zero_cell", "one_cells", "two_cells", "id2", "vcomp", "hcomp_1", "hcomp_2", "unit_1cell",
            "assoc", "assoc_inv", "lunit", "lunit_inv", "runit", "runit_inv"});
  DegenerateBicategory b;
  b.zero_cell = f.string("zero_cell");
  b.one_cells = f.index("one_cells");
  const std::size_t n = b.one_cells;
  b.two_cells = f.boundaries("two_cells", n);
  const std::size_t k = b.two_cells.size();
  b.id2 = f.list("id2", n, k);
  b.vcomp = f.table("vcomp", k, k, k, true);
  b.hcomp_1 = f.table("hcomp_1", n, n, n);
  b.hcomp_2 = f.table("hcomp_2", k, k, k);
  b.unit_1cell = f.index("unit_1cell", n);
  b.assoc = f.list("assoc", n * n * n, k);
  b.assoc_inv = f.list("assoc_inv", n * n * n, k);
  b.lunit = f.list("lunit", n, k);
  b.lunit_inv = f.list("lunit_inv", n, k);
  b.runit = f.list("runit", n, k);
  b.runit_inv = f.list("runit_inv", n, k);
  return b;
}

BicatFunctor read_bicat_functor(const json& doc, const std::string& at) {
  Fields f(doc, at, "bicat_functor",
           {"source", "target", "on_1cells", "on_2cells", "comp_constraint", "unit_constraint"});
  BicatFunctor out;
  out.source = read_degenerate_bicategory(f.need("source"), f.ptr("source"));
  out.target = read_degenerate_bicategory(f.need("target"), f.ptr("target"));
  const std::size_t n = out.source.one_cells;
  const std::size_t k = out.target.two_cells.size();
  out.on_1cells = f.list("on_1cells", n, out.target.one_cells);
  out.on_2cells = f.list("on_2cells", out.source.two_cells.size(), k);
  out.comp_constraint = f.list("comp_constraint", n * n, k);
  out.unit_constraint = f.index("unit_constraint", k);
  return out;
}

FinMonad read_monad(const json& doc, const std::string& at) {
  Fields f(doc, at, "monad", {"category", "on_objects", "on_morphisms", "eta", "mu"});
  FiniteCategory c = read_category(f.need("category"), f.ptr("category"));
  FinMonad m;
  m.T = {c, c, f.list("on_objects", c.objects, c.objects),
         f.list("on_morphisms", c.morphism_count(), c.morphism_count())};
  m.eta = f.list("eta", c.objects, c.morphism_count());
  m.mu = f.list("mu", c.objects, c.morphism_count());
  return m;
}

MonadFunctor read_monad_functor(const json& doc, const std::string& at) {
  Fields f(doc, at, "monad_functor", {"source", "target", "on_objects", "on_morphisms", "phi"});
  MonadFunctor out;
  out.source = read_monad(f.need("source"), f.ptr("source"));
  out.target = read_monad(f.need("target"), f.ptr("target"));
  const FiniteCategory& c = out.source.base();
  const FiniteCategory& d = out.target.base();
  out.U = {c, d, f.list("on_objects", c.objects, d.objects),
           f.list("on_morphisms", c.morphism_count(), d.morphism_count())};
  out.phi = f.list("phi", c.objects, d.morphism_count());
  return out;
}

MonadFunctorTransformation read_monad_transformation(const json& doc, const std::string& at) {
  Fields f(doc, at, "monad_transformation", {"source", "target", "gamma"});
  MonadFunctorTransformation t;
  t.source = read_monad_functor(f.need("source"), f.ptr("source"));
  t.target = read_monad_functor(f.need("target"), f.ptr("target"));
  t.gamma = f.list("gamma", t.source.source.base().objects, t.source.target.base().morphism_count());
  return t;
}

}  // namespace deglab
