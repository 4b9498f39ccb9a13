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

#include <memory>
#include <string>

#include "deglab/deglab.h"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Handles {
  deglab_context* ctx = deglab_context_new();
  deglab_report* report = nullptr;
  ~Handles() {
    deglab_report_free(report);
    deglab_context_free(ctx);
  }
  void reset() {
    deglab_report_free(report);
    report = nullptr;
  }
  nlohmann::json json() const { return nlohmann::json::parse(deglab_report_json(report)); }
};

const char* kZ2g = R"({"kind":"cmon_die","size":2,"unit":0,"mul":[[0,1],[1,0]],"die":1})";

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::string(deglab_version()) == "0.1.0");
  CHECK(std::string(deglab_status_string(DEGLAB_CLAIM_VIOLATED)) == "claim violated");
  const std::string names = deglab_suite_names();
  for (const char* s : {"thm-dc", "thm-dce", "thm-vdb", "thm-vdbe", "thm-db", "thm-moncat-xi", "ex-monad"})
    CHECK(names.find(s) != std::string::npos);
}

TEST_CASE("null handles are input errors") {
  deglab_report* r = nullptr;
  CHECK(deglab_validate(nullptr, kZ2g, &r) == DEGLAB_INPUT_ERROR);
  CHECK(r == nullptr);
  Handles h;
  CHECK(deglab_validate(h.ctx, kZ2g, nullptr) == DEGLAB_INPUT_ERROR);
  CHECK(deglab_validate(h.ctx, nullptr, &h.report) == DEGLAB_INPUT_ERROR);
  CHECK(deglab_report_status(h.report) == DEGLAB_INPUT_ERROR);
  CHECK(deglab_context_set_bound(nullptr, 3) == DEGLAB_INPUT_ERROR);
}

TEST_CASE("validate, shift and shift back") {
  Handles h;
  CHECK(deglab_validate(h.ctx, kZ2g, &h.report) == DEGLAB_OK);
  CHECK(h.json()["verdict"] == "holds");
  CHECK(deglab_report_output(h.report) == nullptr);
  h.reset();

  REQUIRE(deglab_shift(h.ctx, kZ2g, "ddbicat", &h.report) == DEGLAB_OK);
  const std::string bicat = deglab_report_output(h.report);
  CHECK(nlohmann::json::parse(bicat)["kind"] == "ddbicat");
  h.reset();

  REQUIRE(deglab_shift(h.ctx, bicat.c_str(), "cmon", &h.report) == DEGLAB_OK);
  const std::string back = deglab_report_output(h.report);
  h.reset();
  REQUIRE(deglab_shift(h.ctx, back.c_str(), "ddbicat", &h.report) == DEGLAB_OK);
  CHECK(std::string(deglab_report_output(h.report)) == bicat);
  h.reset();

  CHECK(deglab_shift(h.ctx, kZ2g, "nowhere", &h.report) == DEGLAB_INPUT_ERROR);
}

TEST_CASE("errors map onto status codes") {
  Handles h;
  CHECK(deglab_validate(h.ctx, R"({"kind":"monoid","size":2,"unit":0,"mul":[[0,1],[0,0]]})", &h.report) ==
        DEGLAB_CLAIM_VIOLATED);
  CHECK(h.json()["verdict"] == "violated");
  h.reset();
  CHECK(deglab_validate(h.ctx, R"({"kind":"monoid","size":2,"unit":0,"mul":[[0,1],[0,7]]})", &h.report) ==
        DEGLAB_INPUT_ERROR);
  CHECK(h.json()["pointer"] == "/mul/1/1");
  h.reset();
  CHECK(deglab_validate(h.ctx, "[", &h.report) == DEGLAB_INPUT_ERROR);
  h.reset();
  CHECK(deglab_run_suite(h.ctx, "no-such-suite", &h.report) == DEGLAB_INPUT_ERROR);
}

TEST_CASE("enumerate and search") {
  Handles h;
  deglab_context_set_bound(h.ctx, 4);
  REQUIRE(deglab_enumerate(h.ctx, "monoids", 4, &h.report) == DEGLAB_OK);
  CHECK(h.json()["count"] == 35);
  h.reset();
  REQUIRE(deglab_enumerate(h.ctx, "commutative-monoids", 0, &h.report) == DEGLAB_OK);
  CHECK(h.json()["count"] == 19);
  h.reset();
  REQUIRE(deglab_search(h.ctx, "unitality", &h.report) == DEGLAB_OK);
  const std::string witness = deglab_report_output(h.report);
  h.reset();
  CHECK(deglab_validate(h.ctx, witness.c_str(), &h.report) == DEGLAB_OK);
}

TEST_CASE("suite reports carry provenance") {
  Handles h;
  deglab_context_set_seed(h.ctx, 5);
  REQUIRE(deglab_run_suite(h.ctx, "thm-vdbe", &h.report) == DEGLAB_OK);
  const nlohmann::json j = h.json();
  CHECK(j["provenance"]["bound"] == 3);
  CHECK(j["provenance"]["seed"] == 5);
  const std::string text = deglab_report_text(h.report);
  CHECK(text.find("xi_2 equivalence: pass") != std::string::npos);
  CHECK(text.find("xi_1 faithful: FAIL (witness attached)") != std::string::npos);
  CHECK(text.find("xi_3 locally faithful: FAIL (witness attached)") != std::string::npos);
}
