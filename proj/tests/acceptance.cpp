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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (capped at 1).

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "deglab/serialize.hpp"
#include "deglab/suites.hpp"
#include "models.hpp"
#include "oracle.hpp"

using namespace deglab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("deglab-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Runs the CLI with `args` and returns its exit status.
int cli(const std::string& args) {
  const std::string cmd = std::string("\"") + DEGLAB_CLI_PATH + "\" " + args + " >/dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  return raw == -1 || !WIFEXITED(raw) ? -1 : WEXITSTATUS(raw);
}

std::string quoted(const fs::path& p) { return "\"" + p.string() + "\""; }

std::string str(std::size_t a, std::size_t b, const char* what) {
  return std::to_string(a) + "/" + std::to_string(b) + " " + what;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Outcome o;
  std::vector<DegenerateCategory> sample;
  std::size_t monoids = 0, identical = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& m : enumerate_monoids(n, false)) {
      ++monoids;
      const DegenerateCategory c = monoid_to_cat(m);
      identical += canonical_dump(to_document(cat_to_monoid(c))) == canonical_dump(to_document(m));
      sample.push_back(c);
    }
  o.require(monoids == 1 + 2 + 7 + 35, "expected 45 monoids of order <= 4, got " + std::to_string(monoids));
  o.require(identical == monoids, str(identical, monoids, "round trips identical"));
  const EquivalenceReport r = phi1_check(sample);
  for (const char* c : {"full", "faithful", "surjective_on_objects"}) {
    const CriterionResult* found = r.find(c);
    o.require(found && found->passed, std::string("phi_1 criterion ") + c + " failed or missing");
  }
  o.require(r.equivalence, "phi_1 equivalence verdict failed");
  if (o.pass) o.detail = str(identical, monoids, "round trips identical; phi_1 full, faithful, surjective");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto dies = enumerate_cmon_dies(4);
  std::size_t valid = 0, eh = 0, tables = 0;
  std::vector<DDBicat> bicats;
  for (const auto& s : dies) {
    const DDBicat b = build_ddbicat(s);
    valid += check_ddbicat(b).ok();
    eh += eckmann_hilton_report(b).all_pass();
    // Raw consequence: both compositions are the monoid multiplication.
    tables += b.vcomp == s.monoid.table() && b.hcomp == s.monoid.table() && b.lunit == b.runit &&
              b.assoc == b.id2;
    if (b.cells() >= 2) bicats.push_back(b);
  }
  o.require(valid == dies.size(), str(valid, dies.size(), "pass check_ddbicat"));
  o.require(eh == dies.size(), str(eh, dies.size(), "pass the Eckmann-Hilton report"));
  o.require(tables == dies.size(), str(tables, dies.size(), "have hcomp = vcomp, l = r, a = 1 in the raw tables"));

  std::mt19937_64 rng(1);
  std::size_t caught = 0;
  const std::size_t trials = 1000;
  for (std::size_t i = 0; i < trials; ++i) {
    const Tampering t = tamper_ddbicat(bicats[i % bicats.size()], rng);
    if (!check_ddbicat(t.tampered).ok() || !eckmann_hilton_report(t.tampered).all_pass()) ++caught;
  }
  o.require(caught == trials, str(caught, trials, "tamperings caught"));
  if (o.pass)
    o.detail = std::to_string(dies.size()) + " instances valid with all consequences; " +
               str(caught, trials, "tamperings caught");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const DDUniverse u = build_dd_universe(3, 1);
  const std::size_t n = u.objects.size();
  std::vector<std::vector<std::vector<const DDFunctor*>>> homs(n, std::vector<std::vector<const DDFunctor*>>(n));
  auto index_of = [&](const CMonDIE& x) {
    for (std::size_t i = 0; i < n; ++i)
      if (u.objects[i] == x) return i;
    return n;
  };
  for (const auto& f : u.one_cells) homs[index_of(f.source)][index_of(f.target)].push_back(&f);

  std::size_t pairs = 0, matching = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const DDFunctor* f : homs[x][y])
        for (std::size_t z = 0; z < n; ++z)
          for (const DDFunctor* g : homs[y][z]) {
            ++pairs;
            const DDFunctor gf = compose_dd_functors(*g, *f);
            const oracle::RawDDFunctor want =
                oracle::compose_raw({g->map, g->m2, g->m0}, {f->map, f->m2, f->m0}, g->target.monoid.table().rows());
            matching += oracle::RawDDFunctor{gf.map, gf.m2, gf.m0} == want && gf.source == f->source &&
                        gf.target == g->target;
          }
  o.require(matching == pairs, str(matching, pairs, "composites match (GF, G m_F . m_G)"));

  std::size_t triples = 0, associative = 0, unital = 0, functors = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const DDFunctor* f : homs[x][y]) {
        ++functors;
        unital += compose_dd_functors(identity_dd_functor(f->target), *f) == *f &&
                  compose_dd_functors(*f, identity_dd_functor(f->source)) == *f;
        for (std::size_t z = 0; z < n; ++z)
          for (const DDFunctor* g : homs[y][z]) {
            const DDFunctor gf = compose_dd_functors(*g, *f);
            for (std::size_t w = 0; w < n; ++w)
              for (const DDFunctor* h : homs[z][w]) {
                ++triples;
                associative += compose_dd_functors(*h, gf) == compose_dd_functors(compose_dd_functors(*h, *g), *f);
              }
          }
      }
  o.require(associative == triples, str(associative, triples, "triples associate strictly"));
  o.require(unital == functors, str(unital, functors, "functors strictly unital"));
  if (o.pass)
    o.detail = str(matching, pairs, "pairs match the formula") + "; " + std::to_string(triples) +
               " triples associative; " + std::to_string(functors) + " functors unital";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto dies = enumerate_cmon_dies(4);
  std::size_t lax = 0, promoted = 0, wrong = 0;
  for (const auto& x : dies) {
    const DDBicat bx = build_ddbicat(x);
    for (const auto& y : dies) {
      const DDBicat by = build_ddbicat(y);
      const auto& t = y.monoid.table();
      const std::size_t n = y.monoid.size();
      for (const auto& h : enumerate_homs(x.monoid, y.monoid))
        for (Elem m2 = 0; m2 < n; ++m2)
          for (Elem m0 = 0; m0 < n; ++m0) {
            // The unit equation d_Y = F d_X . m2 . m0, read off the raw table.
            const bool unit_eq = t(t(h.map[x.die], m2), m0) == y.die;
            lax += unit_eq;
            try {
              const LaxPromotion p = promote_lax(bx, by, h.map, m2, m0);
              const bool inverses = t(m2, p.m2_inv) == y.monoid.unit() && t(m0, p.m0_inv) == y.monoid.unit();
              if (unit_eq && inverses && check_dd_functor(p.functor).ok()) {
                ++promoted;
              } else {
                ++wrong;
              }
            } catch (const InvalidInput&) {
              if (unit_eq) ++wrong;
            } catch (const RefutationAlarm&) {
              ++wrong;
            }
          }
    }
  }
  o.require(lax > 0, "no lax functor data found");
  o.require(promoted == lax && wrong == 0,
            str(promoted, lax, "lax functors promoted") + ", " + std::to_string(wrong) + " disagreements");
  if (o.pass) o.detail = str(promoted, lax, "lax functors promoted, zero failures");
  return o;
}

Outcome criterion5() {
  Outcome o;
  o.require(check_xi2_equivalence(3).equivalence, "xi_2 equivalence fails at bound 3");

  const auto w1 = witness_xi_unfaithful(1, make_cmon_die(cyclic_group(2), 0));
  o.require(w1 && verify_xi_witness(*w1).ok(), "no validated xi_1 witness on (Z/2, e)");

  std::size_t targets = 0, witnessed = 0;
  for (const auto& y : enumerate_cmon_dies(4)) {
    if (y.monoid.size() < 2) continue;
    ++targets;
    const auto w3 = witness_xi_unfaithful(3, y);
    witnessed += w3 && verify_xi_witness(*w3).ok();
  }
  o.require(witnessed == targets, str(witnessed, targets, "targets with a validated xi_3 witness"));

  const IdentityConstraintRestriction r = restrict_identity_constraint(build_dd_universe(3, 1).one_cells);
  o.require(r.closed_under_composition, "identity-constraint functors not closed under composition");
  o.require(check_restricted_xi1_equivalence(3).equivalence, "restricted xi_1 is not an equivalence at bound 3");
  if (o.pass)
    o.detail = "xi_2 equivalence at bound 3; xi_1 witness validated; " +
               str(witnessed, targets, "xi_3 witnesses validated") + "; restriction closed (" +
               std::to_string(r.kept.size()) + " kept) and an equivalence";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const FinMonoidalCategory sign = sign_moncat();
  const ValidationReport r = check_monoidal(sign);
  o.require(r.ok(), "sign category rejected: " + r.summary());
  const oracle::Model m = oracle::model_of(sign);
  o.require(m.objects == 2, "sign category should have two objects");
  o.require(oracle::pentagon_failures(m).empty(), "oracle pentagon fails on the sign category");
  o.require(oracle::triangle_failures(m).empty(), "oracle triangle fails on the sign category");

  const auto tampered = tamper_associator(sign, 0, 1, 1);
  o.require(tampered.has_value(), "no alternative associator component at (0,1,1)");
  if (tampered) {
    const ValidationReport t = check_monoidal(*tampered);
    std::vector<std::vector<Elem>> checker;
    for (const auto& v : t.by_axiom("pentagon")) checker.push_back(v.at);
    std::sort(checker.begin(), checker.end());
    const auto by_oracle = oracle::pentagon_failures(oracle::model_of(*tampered));
    o.require(!checker.empty(), "tampered associator not detected by the pentagon check");
    o.require(checker == by_oracle, "checker and oracle disagree on the tampered pentagon instances");
    if (o.pass)
      o.detail = "16/16 quadruples pass in checker and oracle; tampering at (0,1,1) fails " +
                 std::to_string(checker.size()) + " quadruples in both";
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  o.require(check_xi_equivalence(2).equivalence, "xi equivalence fails on the stock universe");
  const FinMonoidalCategory flip = flip_moncat();
  const DegTransformation t = identity_deg_transformation(identity_monoidal_functor(flip));
  const DegTransformation c = compose_deg_transformations(identity_deg_transformation(t.target), t);
  o.require(check_deg_transformation(c).ok(), "composite transformation is invalid");
  o.require(c.dist == flip.o(flip.unit, t.dist), "composite distinguished object is not I(x)alpha");
  o.require(c.dist != t.dist, "no unitality failure: I(x)alpha equals alpha");

  const fs::path file = scratch_dir() / "unitality.json";
  write_file(file, canonical_dump(unitality_failure_document(t)));
  o.require(cli("validate " + quoted(file)) == 0, "CLI does not replay the unitality witness");
  const fs::path searched = scratch_dir() / "unitality-search.json";
  o.require(cli("search unitality -o " + quoted(searched)) == 0, "CLI search for a unitality witness failed");
  o.require(cli("validate " + quoted(searched)) == 0, "CLI does not replay the searched witness");
  if (o.pass)
    o.detail = "xi equivalence on the stock universe; I(x)I = " + std::to_string(c.dist) + " != " +
               std::to_string(t.dist) + " = I in flip, replayed via CLI";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t images = 0, good = 0;
  for (const auto& s : stock_moncats()) {
    const auto functors = enumerate_monoidal_functors(s.category, s.category);
    for (const auto& f : functors)
      for (const auto& g : functors)
        for (const auto& theta : enumerate_monoidal_transformations(f, g)) {
          ++images;
          const DegTransformation e = embed_monoidal_transformation(theta);
          good += e.dist == s.category.unit && check_deg_transformation(e).ok();
        }
  }
  o.require(images > 0 && good == images, str(good, images, "embedded images with dist I and valid"));

  const DegTransformation d = discrete_dist_transformation();
  const FinMonoidalCategory& m = d.target.target;
  o.require(check_deg_transformation(d).ok(), "discrete transformation with dist g is invalid");
  o.require(d.dist != m.unit, "discrete transformation has dist I");
  o.require(!find_object_isomorphism(m, d.dist, m.unit), "an isomorphism g -> I was found");
  bool any = false;
  for (Elem f = 0; f < m.morphisms(); ++f)
    for (Elem g = 0; g < m.morphisms(); ++g)
      if (m.base.morphisms[f].src == d.dist && m.base.morphisms[f].tgt == m.unit &&
          m.base.morphisms[g].src == m.unit && m.base.morphisms[g].tgt == d.dist)
        any = true;
  o.require(!any, "raw scan found morphisms between g and I");
  if (o.pass) o.detail = str(good, images, "embedded images valid with dist I") + "; dist g valid, no g -> I iso";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto cases = terminal_collapse_cases(20, 1);
  std::size_t agree = 0, oracle_agree = 0;
  for (const auto& c : cases) {
    agree += c.agrees();
    auto table = [](const json& d) { return d["mul"].get<oracle::Table>(); };
    bool expected = false;
    if (c.kind == "monoid") {
      expected = oracle::is_monoid(table(c.data), c.data["unit"].get<Elem>());
    } else if (c.kind == "hom") {
      const json& s = c.data["source"];
      const json& t = c.data["target"];
      expected = oracle::is_hom(table(s), s["unit"].get<Elem>(), table(t), t["unit"].get<Elem>(),
                                c.data["map"].get<std::vector<Elem>>());
    } else {
      expected = oracle::is_natural(table(c.data["target"]), c.data["F"].get<std::vector<Elem>>(),
                                    c.data["G"].get<std::vector<Elem>>(), c.data["d"].get<Elem>());
    }
    oracle_agree += c.monad_verdict == expected;
  }
  o.require(cases.size() == 20, "expected 20 cases");
  o.require(agree == cases.size(), str(agree, cases.size(), "monad verdicts match degenerate_cat"));
  o.require(oracle_agree == cases.size(), str(oracle_agree, cases.size(), "monad verdicts match the raw oracle"));
  if (o.pass) o.detail = str(agree, cases.size(), "cases agree (monoid, hom and transformation kinds)");
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::size_t witnesses = 0, replayed = 0, stable = 0;
  for (const auto& name : suite_names()) {
    SuiteOptions opts;
    const SuiteResult s = run_suite(name, opts);
    for (const auto& item : s.items)
      for (const auto& w : item.witnesses) {
        ++witnesses;
        const std::string text = canonical_dump(w.document);
        stable += canonical_dump(parse_document(text)) == text;
        const fs::path file = scratch_dir() / ("witness-" + std::to_string(witnesses) + ".json");
        write_file(file, text);
        const int status = cli("validate " + quoted(file));
        if (status == (w.expect_valid ? 0 : 1)) {
          ++replayed;
        } else if (o.pass) {
          o.require(false, name + " / " + item.name + " / " + w.name + ": CLI exit " + std::to_string(status));
        }
      }
  }
  o.require(witnesses > 0, "no witnesses emitted");
  o.require(stable == witnesses, str(stable, witnesses, "witness documents stable under re-serialization"));

  // Byte-exact shift round trips through files.
  std::size_t trips = 0, exact = 0;
  auto trip = [&](const std::string& start, const std::string& to, const std::string& back) {
    ++trips;
    const fs::path a = scratch_dir() / ("trip-" + std::to_string(trips) + "-a.json");
    const fs::path b = scratch_dir() / ("trip-" + std::to_string(trips) + "-b.json");
    const fs::path c = scratch_dir() / ("trip-" + std::to_string(trips) + "-c.json");
    write_file(a, start);
    if (cli("shift --to " + to + " " + quoted(a) + " -o " + quoted(b)) != 0) return;
    if (cli("shift --to " + back + " " + quoted(b) + " -o " + quoted(c)) != 0) return;
    exact += read_file(c) == start;
  };
  for (const auto& s : enumerate_cmon_dies(3)) trip(canonical_dump(to_document(s)), "ddbicat", "cmon");
  for (const auto& m : enumerate_monoids(3, false)) trip(canonical_dump(to_document(m)), "category", "monoid");
  for (const auto& s : stock_moncats()) trip(canonical_dump(to_document(s.category)), "bicat", "moncat");
  o.require(exact == trips, str(exact, trips, "shift round trips byte-identical"));
  if (o.pass)
    o.detail = str(replayed, witnesses, "suite witnesses replay with the same verdict") + "; " +
               str(exact, trips, "shift round trips byte-identical");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double budget_s;  // 0 = no runtime expectation
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "monoid/category round trip and phi_1", 10, criterion1},
      {2, "Eckmann-Hilton suite and tampering", 60, criterion2},
      {3, "functor composition law", 30, criterion3},
      {4, "lax promotion", 0, criterion4},
      {5, "xi_2 equivalence, xi_1/xi_3 witnesses, restriction", 0, criterion5},
      {6, "sign category pentagon", 5, criterion6},
      {7, "monoidal xi and unitality failure", 0, criterion7},
      {8, "embedded transformations and the essential image", 0, criterion8},
      {9, "terminal-category collapse", 0, criterion9},
      {10, "replayability and canonical round trips", 0, criterion10},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget)";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << c.title << " - "
              << o.detail << " [" << timing << "]" << std::endl;
    failed += !o.pass;
  }
  std::error_code ec;
  fs::remove_all(scratch_dir(), ec);
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
