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

#include "deglab/commands.hpp"

#include <functional>
#include <random>

namespace deglab {

namespace {

json provenance(const CommandOptions& o) {
  return {{"bound", o.bound ? json(*o.bound) : json(nullptr)}, {"seed", o.seed}, {"lax", o.lax}};
}

CommandResult finish(const std::string& command, bool holds, json body, std::string text,
                     const CommandOptions& o) {
  body["command"] = command;
  body["verdict"] = holds ? "holds" : "violated";
  body["provenance"] = provenance(o);
  return {holds ? Status::Ok : Status::ClaimViolated, std::move(body), std::move(text), std::nullopt};
}

CommandResult guarded(const std::string& command, const CommandOptions& o,
                      const std::function<CommandResult()>& body) {
  auto failure = [&](Status s, const char* verdict, const std::string& message, json extra) {
    extra["command"] = command;
    extra["verdict"] = verdict;
    extra["error"] = message;
    extra["provenance"] = provenance(o);
    return CommandResult{s, std::move(extra), command + ": " + message, std::nullopt};
  };
  try {
    return body();
  } catch (const StructuralError& e) {
    return failure(Status::InputError, "input_error", e.what(), {{"pointer", e.pointer()}});
  } catch (const PreconditionError& e) {
    return failure(Status::InputError, "input_error", e.what(), json::object());
  } catch (const InvalidInput& e) {
    return failure(Status::ClaimViolated, "violated", e.what(), {{"findings", e.report().to_json()}});
  } catch (const RefutationAlarm& e) {
    return failure(Status::ClaimViolated, "violated", std::string("refutation: ") + e.what(), json::object());
  } catch (const std::exception& e) {
    return failure(Status::Internal, "internal_error", e.what(), json::object());
  }
}

std::string verdict_line(const std::string& what, const ValidationReport& r) {
  return what + ": " + (r.ok() ? "valid" : "INVALID (" + r.summary() + ")");
}

CMonDIE first_nontrivial_die(std::size_t bound) {
  for (const auto& d : enumerate_cmon_dies(bound))
    if (d.monoid.size() >= 2) return d;
  throw PreconditionError("no instance with two or more elements within the bound");
}

}  // namespace

CommandResult cmd_validate(const std::string& text, const CommandOptions& o) {
  return guarded("validate", o, [&] {
    const json doc = parse_document(text);
    DocumentVerdict v = validate_document(doc, o.lax);
    return finish("validate", v.holds(), {{"kind", v.kind}, {"findings", v.report.to_json()}},
                  verdict_line(v.kind, v.report), o);
  });
}

CommandResult cmd_shift(const std::string& text, const std::string& to, const CommandOptions& o) {
  return guarded("shift", o, [&] {
    const json doc = parse_document(text);
    json out;
    if (to == "cmon") {
      out = to_document(extract_cmon_die(read_ddbicat(doc)));
    } else if (to == "ddbicat") {
      out = to_document(build_ddbicat(read_cmon_die(doc)));
    } else if (to == "monoid") {
      out = to_document(cat_to_monoid(read_degenerate_category(doc)));
    } else if (to == "category") {
      out = to_document(monoid_to_cat(read_monoid(doc)));
    } else if (to == "bicat") {
      out = to_document(shift_to_bicat(read_moncat(doc)));
    } else if (to == "moncat") {
      out = to_document(shift_from_bicat(read_degenerate_bicategory(doc)));
    } else {
      throw PreconditionError("unknown shift target \"" + to + "\"");
    }
    CommandResult r = finish("shift", true, {{"from", document_kind(doc)}, {"to", document_kind(out)}},
                             "shift " + document_kind(doc) + " -> " + document_kind(out), o);
    r.report["output"] = out;
    r.output = std::move(out);
    return r;
  });
}

CommandResult cmd_analyze_functor(const std::string& text, const CommandOptions& o) {
  return guarded("analyze-functor", o, [&] {
    const json doc = parse_document(text);
    const std::string kind = document_kind(doc);
    if (kind == "bicat_functor") {
      BicatFunctor f = read_bicat_functor(doc);
      ValidationReport r = check_bicat_functor(f);
      CommandResult out = finish("analyze-functor", r.ok(), {{"kind", kind}, {"findings", r.to_json()}},
                                 verdict_line(kind, r), o);
      if (r.ok()) {
        out.output = to_document(xi(f));
        out.report["output"] = *out.output;
      }
      return out;
    }
    if (kind != "weak_functor") throw StructuralError("expected kind \"weak_functor\" or \"bicat_functor\"", "/kind");
    WeakFunctorData w = read_weak_functor(doc);
    if (o.lax) {
      LaxPromotion p = promote_lax(w.source, w.target, w.map, w.m2, w.m0);
      CommandResult out = finish("analyze-functor", true,
                                 {{"kind", kind}, {"m2_inv", p.m2_inv}, {"m0_inv", p.m0_inv}},
                                 "lax functor promoted: m2^-1 = " + std::to_string(p.m2_inv) +
                                     ", m0^-1 = " + std::to_string(p.m0_inv),
                                 o);
      out.output = to_document(p.functor);
      out.report["output"] = *out.output;
      return out;
    }
    WeakFunctorAnalysis a = analyze_weak_functor(w.source, w.target, w.map, w.m2, w.m0);
    json body = {{"kind", kind},
                 {"findings", a.report.to_json()},
                 {"naturality_vacuous", a.naturality_vacuous},
                 {"associativity_vacuous", a.associativity_vacuous},
                 {"m0_from_formula", a.m0_from_formula ? json(*a.m0_from_formula) : json(nullptr)}};
    CommandResult out = finish("analyze-functor", a.report.ok(), std::move(body), verdict_line(kind, a.report), o);
    if (a.functor) {
      out.output = to_document(*a.functor);
      out.report["output"] = *out.output;
    }
    return out;
  });
}

CommandResult cmd_compare(const std::string& first, const std::string& second, const CommandOptions& o) {
  return guarded("compare", o, [&] {
    const json a = parse_document(first);
    const json b = parse_document(second);
    const std::string ka = document_kind(a), kb = document_kind(b);
    const bool identical = canonical_dump(a) == canonical_dump(b);
    json body = {{"kinds", {ka, kb}}, {"identical", identical}};
    bool holds = identical;
    std::string relation = "identical";
    if (ka == kb && (ka == "monoid" || ka == "cmon_die" || ka == "ddbicat")) {
      auto monoid_of = [&](const json& d) -> FiniteMonoid {
        if (ka == "monoid") return read_monoid(d);
        if (ka == "cmon_die") return read_cmon_die(d).monoid;
        return extract_cmon_die(read_ddbicat(d)).monoid;
      };
      holds = isomorphic(monoid_of(a), monoid_of(b));
      relation = "isomorphic underlying monoids";
    } else if (ka == kb && ka == "dd_functor") {
      DDFunctor f = read_dd_functor(a), g = read_dd_functor(b);
      holds = f.source == g.source && f.target == g.target && xi(f) == xi(g);
      relation = "equal images under xi";
      auto t = transformation_between(f, g);
      body["transformation"] = t ? to_document(*t) : json(nullptr);
    } else if (ka == kb && ka == "dd_modification") {
      DDModification f = read_dd_modification(a), g = read_dd_modification(b);
      holds = xi(f) == xi(g);
      relation = "equal images under xi";
    }
    body["relation"] = relation;
    return finish("compare", holds, std::move(body),
                  relation + ": " + (holds ? "yes" : "no") + (identical ? " (identical documents)" : ""), o);
  });
}

CommandResult cmd_search(const std::string& what, const CommandOptions& o) {
  return guarded("search", o, [&] {
    const std::size_t bound = o.bound.value_or(3);
    std::optional<json> found;
    if (what == "xi1-unfaithful") {
      if (auto w = witness_xi_unfaithful(1, make_cmon_die(cyclic_group(2), 0))) found = xi_witness_document(*w);
    } else if (what == "xi3-unfaithful") {
      if (auto w = witness_xi_unfaithful(3, first_nontrivial_die(bound))) found = xi_witness_document(*w);
    } else if (what == "nonidentity-nat-trans") {
      for (std::size_t n = 2; n <= bound && !found; ++n)
        for (const auto& m : enumerate_monoids(n, true, std::max(bound, max_enumeration_size())))
          if (auto t = find_nonidentity_nat_trans(m)) {
            found = to_document(*t);
            break;
          }
    } else if (what == "unitality") {
      const FinMonoidalCategory flip = flip_moncat();
      const DegTransformation t = identity_deg_transformation(identity_monoidal_functor(flip));
      if (compose_deg_transformations(identity_deg_transformation(t.target), t).dist != t.dist) {
        found = unitality_failure_document(t);
      }
    } else if (what == "unit-closure") {
      if (auto c = find_unit_closure_failure(flip_moncat())) found = closure_failure_document(*c);
    } else if (what == "outside-image") {
      const DegTransformation t = discrete_dist_transformation();
      const FinMonoidalCategory& m = t.source.target;
      if (check_deg_transformation(t).ok() && !find_object_isomorphism(m, t.dist, m.unit)) {
        found = outside_essential_image_document(t);
      }
    } else if (what == "tamper") {
      std::mt19937_64 rng(o.seed);
      const DDBicat b = build_ddbicat(first_nontrivial_die(bound));
      Tampering t = tamper_ddbicat(b, rng);
      const bool caught = !check_ddbicat(t.tampered).ok() || !eckmann_hilton_report(t.tampered).all_pass();
      CommandResult r = finish("search", caught, {{"what", what}, {"tampering", t.describe()}},
                               std::string("tampering ") + (caught ? "caught" : "NOT caught"), o);
      r.output = to_document(t.tampered);
      r.report["output"] = *r.output;
      return r;
    } else {
      throw PreconditionError("unknown search \"" + what + "\"");
    }
    CommandResult r = finish("search", found.has_value(), {{"what", what}},
                             what + ": " + (found ? "witness found" : "no witness"), o);
    if (found) {
      r.output = *found;
      r.report["output"] = *found;
    }
    return r;
  });
}

CommandResult cmd_enumerate(const std::string& what, std::optional<std::size_t> size,
                            const CommandOptions& o) {
  return guarded("enumerate", o, [&] {
    const std::size_t n = size.value_or(o.bound.value_or(3));
    json items = json::array();
    if (what == "monoids" || what == "commutative-monoids") {
      for (auto& m : enumerate_monoids(n, what != "monoids", o.bound))
        items.push_back(to_document(m));
    } else if (what == "cmon-dies") {
      for (auto& d : enumerate_cmon_dies(n)) items.push_back(to_document(d));
    } else if (what == "moncats") {
      for (auto& m : stock_moncats())
        if (m.category.objects() <= n) items.push_back({{"name", m.name}, {"document", to_document(m.category)}});
    } else {
      throw PreconditionError("unknown enumeration \"" + what + "\"");
    }
    const std::size_t count = items.size();
    return finish("enumerate", true, {{"what", what}, {"size", n}, {"count", count}, {"items", std::move(items)}},
                  what + " (" + std::to_string(n) + "): " + std::to_string(count), o);
  });
}

CommandResult cmd_suite(const std::string& name, const CommandOptions& o) {
  return guarded("suite", o, [&] {
    SuiteOptions so;
    so.bound = o.bound;
    so.seed = o.seed;
    SuiteResult s = run_suite(name, so);
    CommandResult r = finish("suite", s.holds(), s.to_json(), s.to_text(), o);
    r.report["provenance"]["bound"] = s.bound;
    return r;
  });
}

}  // namespace deglab
