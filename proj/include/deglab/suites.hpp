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

// Document validation and the theorem suites. A suite is a list of items,
// each with an observed and an expected outcome; negative results are items
// expected to fail, and carry replayable witness documents.

#ifndef DEGLAB_SUITES_HPP
#define DEGLAB_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deglab/serialize.hpp"

namespace deglab {

struct DocumentVerdict {
  std::string kind;
  ValidationReport report;
  bool holds() const { return report.ok(); }
};

/// Dispatches on "kind". Structure documents are checked against their
/// axioms; claim documents (xi_witness, unitality_failure, closure_failure,
/// outside_essential_image) hold when the recorded phenomenon is reproduced.
/// `lax` relaxes invertibility for dd_transformation and monoidal_functor.
DocumentVerdict validate_document(const json& doc, bool lax = false);

/// Claim documents.
json xi_witness_document(const XiUnfaithfulWitness& w);
json unitality_failure_document(const DegTransformation& t);
json closure_failure_document(const ClosureFailure& c);
json outside_essential_image_document(const DegTransformation& t);

/// Identity functors on discrete Z/2, distinguished object 1, identity
/// components.
DegTransformation discrete_dist_transformation();

struct SuiteWitness {
  std::string name;
  bool expect_valid = true;
  json document;
};

struct SuiteItem {
  explicit SuiteItem(std::string n, std::optional<bool> expect = true)
      : name(std::move(n)), expected(expect) {}

  std::string name;
  bool passed = true;
  /// Absent for informational items.
  std::optional<bool> expected;
  std::string detail;
  std::vector<SuiteWitness> witnesses;
  json data;

  bool as_expected() const { return !expected || *expected == passed; }
};

struct SuiteOptions {
  std::optional<std::size_t> bound;
  std::uint64_t seed = 1;
  std::size_t tamper_trials = 1000;
};

struct SuiteResult {
  std::string name;
  std::size_t bound = 0;
  std::uint64_t seed = 0;
  std::vector<SuiteItem> items;

  bool holds() const;
  json to_json() const;
  std::string to_text() const;
};

std::vector<std::string> suite_names();
/// Throws PreconditionError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace deglab

#endif  // DEGLAB_SUITES_HPP
