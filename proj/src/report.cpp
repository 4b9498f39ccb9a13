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

#include "deglab/report.hpp"

#include <algorithm>
#include <sstream>

namespace deglab {

void ValidationReport::add(std::string axiom, std::vector<Elem> at,
                           std::string detail) {
  violations_.push_back({std::move(axiom), std::move(at), std::move(detail)});
}

void ValidationReport::note(std::string text) { notes_.push_back(std::move(text)); }

void ValidationReport::merge(const ValidationReport& other,
                             std::string_view prefix) {
  for (const auto& v : other.violations_) {
    Violation copy = v;
    if (!prefix.empty()) copy.axiom = std::string(prefix) + "." + copy.axiom;
    violations_.push_back(std::move(copy));
  }
  for (const auto& n : other.notes_) {
    notes_.push_back(prefix.empty() ? n : std::string(prefix) + ": " + n);
  }
}

bool ValidationReport::has(std::string_view axiom) const {
  return count(axiom) > 0;
}

std::size_t ValidationReport::count(std::string_view axiom) const {
  return static_cast<std::size_t>(
      std::count_if(violations_.begin(), violations_.end(),
                    [&](const Violation& v) { return v.axiom == axiom; }));
}

std::vector<Violation> ValidationReport::by_axiom(std::string_view axiom) const {
  std::vector<Violation> out;
  std::copy_if(violations_.begin(), violations_.end(), std::back_inserter(out),
               [&](const Violation& v) { return v.axiom == axiom; });
  return out;
}

nlohmann::json ValidationReport::to_json() const {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : violations_) {
    nlohmann::json item = {{"axiom", v.axiom}, {"at", v.at}};
    if (!v.detail.empty()) item["detail"] = v.detail;
    vs.push_back(std::move(item));
  }
  nlohmann::json out = {{"valid", ok()}, {"violations", std::move(vs)}};
  if (!notes_.empty()) out["notes"] = notes_;
  return out;
}

std::string ValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  os << violations_.size() << " violation(s); first: " << violations_.front().axiom;
  if (!violations_.front().at.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < violations_.front().at.size(); ++i) {
      if (i) os << ",";
      os << violations_.front().at[i];
    }
    os << ")";
  }
  if (!violations_.front().detail.empty()) os << ": " << violations_.front().detail;
  return os.str();
}

}  // namespace deglab
