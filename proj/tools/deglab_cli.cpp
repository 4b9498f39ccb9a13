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

// deglab: command-line front end over the C API.
//
// Exit status: 0 the verdict holds, 1 an axiom or claim is violated,
// 2 malformed input or usage, 3 internal error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "deglab/deglab.h"

namespace {

struct ReportDeleter {
  void operator()(deglab_report* r) const { deglab_report_free(r); }
};
using Report = std::unique_ptr<deglab_report, ReportDeleter>;

struct ContextDeleter {
  void operator()(deglab_context* c) const { deglab_context_free(c); }
};

bool read_input(const std::string& path, std::string& out) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    ss << in.rdbuf();
  }
  out = ss.str();
  return true;
}

bool write_output(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite checks for degenerate categories, bicategories and their dimension shifts", "deglab"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::size_t bound = 0;
  bool lax = false;
  std::uint64_t seed = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--bound", bound, "Size bound for enumerations and suites")->check(CLI::PositiveNumber);
  app.add_flag("--lax", lax, "Do not require invertible constraints");
  app.add_option("--seed", seed, "Seed for randomized tampering");
  app.set_version_flag("--version", deglab_version());

  std::string input, second, output, what, target;
  std::size_t size = 0;

  auto* validate = app.add_subcommand("validate", "Check a document against its axioms");
  validate->add_option("file", input, "Document ('-' for stdin)")->required();

  auto* shift = app.add_subcommand("shift", "Move a structure across a dimension shift");
  shift->add_option("file", input, "Document ('-' for stdin)")->required();
  auto* to_group = shift->add_option_group("target", "Shift target");
  to_group->add_option("--to", target, "cmon, ddbicat, monoid, category, bicat or moncat")
      ->check(CLI::IsMember({"cmon", "ddbicat", "monoid", "category", "bicat", "moncat"}));
  for (const char* t : {"cmon", "ddbicat", "monoid", "category", "bicat", "moncat"}) {
    std::string name = t;
    to_group->add_flag_callback("--to-" + name, [&target, name] { target = name; }, "Same as --to " + name);
  }
  to_group->require_option(1);
  shift->add_option("-o,--output", output, "Write the shifted document here");

  auto* analyze = app.add_subcommand("analyze-functor", "Analyze weak or lax functor data");
  analyze->add_option("file", input, "weak_functor or bicat_functor document")->required();
  analyze->add_option("-o,--output", output, "Write the resulting functor here");

  auto* compare = app.add_subcommand("compare", "Compare two documents");
  compare->add_option("first", input, "First document")->required();
  compare->add_option("second", second, "Second document")->required();

  auto* search = app.add_subcommand("search", "Search for a witness");
  search->add_option("what", what,
                     "xi1-unfaithful, xi3-unfaithful, nonidentity-nat-trans, unitality, unit-closure, "
                     "outside-image or tamper")
      ->required();
  search->add_option("-o,--output", output, "Write the witness document here");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate structures up to isomorphism");
  enumerate->add_option("what", what, "monoids, commutative-monoids, cmon-dies or moncats")->required();
  enumerate->add_option("--size", size, "Order (defaults to the bound)");

  auto* suite = app.add_subcommand("suite", "Run a theorem suite");
  suite->add_option("name", what, "Suite name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::unique_ptr<deglab_context, ContextDeleter> ctx(deglab_context_new());
  if (!ctx) return 3;
  deglab_context_set_bound(ctx.get(), bound);
  deglab_context_set_lax(ctx.get(), lax ? 1 : 0);
  deglab_context_set_seed(ctx.get(), seed);

  std::string text_a, text_b;
  auto load = [](const std::string& path, std::string& into) {
    if (read_input(path, into)) return true;
    std::cerr << "deglab: cannot read " << path << "\n";
    return false;
  };

  deglab_report* raw = nullptr;
  if (validate->parsed()) {
    if (!load(input, text_a)) return 2;
    deglab_validate(ctx.get(), text_a.c_str(), &raw);
  } else if (shift->parsed()) {
    if (!load(input, text_a)) return 2;
    deglab_shift(ctx.get(), text_a.c_str(), target.c_str(), &raw);
  } else if (analyze->parsed()) {
    if (!load(input, text_a)) return 2;
    deglab_analyze_functor(ctx.get(), text_a.c_str(), &raw);
  } else if (compare->parsed()) {
    if (!load(input, text_a) || !load(second, text_b)) return 2;
    deglab_compare(ctx.get(), text_a.c_str(), text_b.c_str(), &raw);
  } else if (search->parsed()) {
    deglab_search(ctx.get(), what.c_str(), &raw);
  } else if (enumerate->parsed()) {
    deglab_enumerate(ctx.get(), what.c_str(), size, &raw);
  } else if (suite->parsed()) {
    deglab_run_suite(ctx.get(), what.c_str(), &raw);
  }
  Report report(raw);
  if (!report) return 3;
  const deglab_status status = deglab_report_status(report.get());

  const char* produced = deglab_report_output(report.get());
  if (produced && !output.empty() && !write_output(output, produced)) {
    std::cerr << "deglab: cannot write " << output << "\n";
    return 2;
  }

  if (format == "json") {
    std::fputs(deglab_report_json(report.get()), stdout);
  } else if (shift->parsed() && produced && output.empty()) {
    std::fputs(produced, stdout);
  } else {
    std::string text = deglab_report_text(report.get());
    if (!text.empty() && text.back() != '\n') text += '\n';
    std::fputs(text.c_str(), status == DEGLAB_INPUT_ERROR ? stderr : stdout);
  }
  return static_cast<int>(status);
}
