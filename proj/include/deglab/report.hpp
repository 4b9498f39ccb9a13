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

#ifndef DEGLAB_REPORT_HPP
#define DEGLAB_REPORT_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace deglab {

/// Elements, objects, morphisms and cells are dense indices.
using Elem = std::size_t;

inline constexpr Elem kUndefined = static_cast<Elem>(-1);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed data: wrong shapes, out-of-range indices, ill-typed composites,
/// schema violations. Distinct from an axiom failure on well-formed data.
class StructuralError : public Error {
 public:
  explicit StructuralError(const std::string& what, std::string pointer = {})
      : Error(pointer.empty() ? what : what + " (at " + pointer + ")"),
        pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

/// A precondition on the caller's arguments failed (bound exceeded, bad
/// dimension, mismatched endpoints).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A single failed axiom instance. `at` lists the indices the axiom was
/// instantiated at, in the order the axiom names them.
struct Violation {
  std::string axiom;
  std::vector<Elem> at;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

class ValidationReport {
 public:
  void add(std::string axiom, std::vector<Elem> at, std::string detail = {});

  /// Informational entry, e.g. an axiom that was evaluated and found vacuous.
  void note(std::string text);

  /// Appends every violation of `other`, optionally prefixing axiom names.
  void merge(const ValidationReport& other, std::string_view prefix = {});

  bool ok() const noexcept { return violations_.empty(); }
  bool has(std::string_view axiom) const;
  std::size_t count(std::string_view axiom) const;
  std::vector<Violation> by_axiom(std::string_view axiom) const;

  const std::vector<Violation>& violations() const noexcept { return violations_; }
  const std::vector<std::string>& notes() const noexcept { return notes_; }

  nlohmann::json to_json() const;
  std::string summary() const;

 private:
  std::vector<Violation> violations_;
  std::vector<std::string> notes_;
};

/// Thrown when an operation requires valid data and the axiom check failed.
class InvalidInput : public Error {
 public:
  InvalidInput(const std::string& what, ValidationReport report)
      : Error(what + ": " + report.summary()), report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// A claimed theorem failed on an instance that passed its axiom checks.
/// Reaching this on real input means the checker and the theory disagree.
class RefutationAlarm : public Error {
 public:
  using Error::Error;
};

}  // namespace deglab

#endif  // DEGLAB_REPORT_HPP
