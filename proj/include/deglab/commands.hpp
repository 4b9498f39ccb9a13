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

// The command layer behind the C API: each verb takes document text and
// options, never throws, and returns a status with a machine-readable report.

#ifndef DEGLAB_COMMANDS_HPP
#define DEGLAB_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "deglab/suites.hpp"

namespace deglab {

enum class Status : int { Ok = 0, ClaimViolated = 1, InputError = 2, Internal = 3 };

struct CommandOptions {
  std::optional<std::size_t> bound;
  bool lax = false;
  std::uint64_t seed = 1;
};

struct CommandResult {
  Status status = Status::Ok;
  json report;
  std::string text;
  /// The produced document, for verbs that produce one.
  std::optional<json> output;
};

CommandResult cmd_validate(const std::string& text, const CommandOptions& o);
/// `to` is one of cmon, ddbicat, monoid, category, bicat, moncat.
CommandResult cmd_shift(const std::string& text, const std::string& to, const CommandOptions& o);
CommandResult cmd_analyze_functor(const std::string& text, const CommandOptions& o);
CommandResult cmd_compare(const std::string& first, const std::string& second, const CommandOptions& o);
/// xi1-unfaithful, xi3-unfaithful, nonidentity-nat-trans, unitality,
/// unit-closure, outside-image, tamper.
CommandResult cmd_search(const std::string& what, const CommandOptions& o);
/// monoids, commutative-monoids, cmon-dies, moncats; `size` defaults to the bound.
CommandResult cmd_enumerate(const std::string& what, std::optional<std::size_t> size,
                            const CommandOptions& o);
CommandResult cmd_suite(const std::string& name, const CommandOptions& o);

}  // namespace deglab

#endif  // DEGLAB_COMMANDS_HPP
