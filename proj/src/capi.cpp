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

#include "deglab/deglab.h"

#include <new>
#include <optional>
#include <string>

#include "deglab/commands.hpp"

struct deglab_context {
  deglab::CommandOptions options;
};

struct deglab_report {
  deglab_status status = DEGLAB_OK;
  std::string json;
  std::string text;
  std::optional<std::string> output;
};

namespace {

deglab_status emit(const deglab::CommandResult& r, deglab_report** out) {
  auto* rep = new (std::nothrow) deglab_report;
  if (!rep) return DEGLAB_INTERNAL;
  rep->status = static_cast<deglab_status>(r.status);
  try {
    rep->json = deglab::canonical_dump(r.report);
    rep->text = r.text;
    if (r.output) rep->output = deglab::canonical_dump(*r.output);
  } catch (...) {
    rep->status = DEGLAB_INTERNAL;
  }
  *out = rep;
  return rep->status;
}

template <class Fn>
deglab_status run(deglab_context* ctx, deglab_report** out, Fn&& fn) {
  if (!ctx || !out) return DEGLAB_INPUT_ERROR;
  *out = nullptr;
  try {
    return emit(fn(ctx->options), out);
  } catch (...) {
    deglab::CommandResult r;
    r.status = deglab::Status::Internal;
    r.report = {{"verdict", "internal_error"}};
    r.text = "internal error";
    return emit(r, out);
  }
}

deglab::CommandResult missing(const char* what) {
  deglab::CommandResult r;
  r.status = deglab::Status::InputError;
  r.report = {{"verdict", "input_error"}, {"error", std::string(what) + " is NULL"}};
  r.text = std::string(what) + " is NULL";
  return r;
}

}  // namespace

extern "C" {

const char* deglab_version(void) { return "0.1.0"; }

const char* deglab_status_string(deglab_status status) {
  switch (status) {
    case DEGLAB_OK: return "ok";
    case DEGLAB_CLAIM_VIOLATED: return "claim violated";
    case DEGLAB_INPUT_ERROR: return "input error";
    case DEGLAB_INTERNAL: return "internal error";
  }
  return "unknown status";
}

deglab_context* deglab_context_new(void) { return new (std::nothrow) deglab_context; }

void deglab_context_free(deglab_context* ctx) { delete ctx; }

deglab_status deglab_context_set_bound(deglab_context* ctx, size_t bound) {
  if (!ctx) return DEGLAB_INPUT_ERROR;
  ctx->options.bound = bound ? std::optional<std::size_t>(bound) : std::nullopt;
  return DEGLAB_OK;
}

deglab_status deglab_context_set_lax(deglab_context* ctx, int lax) {
  if (!ctx) return DEGLAB_INPUT_ERROR;
  ctx->options.lax = lax != 0;
  return DEGLAB_OK;
}

deglab_status deglab_context_set_seed(deglab_context* ctx, uint64_t seed) {
  if (!ctx) return DEGLAB_INPUT_ERROR;
  ctx->options.seed = seed;
  return DEGLAB_OK;
}

deglab_status deglab_validate(deglab_context* ctx, const char* document, deglab_report** out) {
  return run(ctx, out, [&](const deglab::CommandOptions& o) {
    return document ? deglab::cmd_validate(document, o) : missing("document");
  });
}

deglab_status deglab_shift(deglab_context* ctx, const char* document, const char* target,
                           deglab_report** out) {
  return run(ctx, out, [&](const deglab::CommandOptions& o) {
    if (!document) return missing("document");
    if (!target) return missing("target");
    return deglab::cmd_shift(document, target, o);
  });
}

deglab_status deglab_analyze_functor(deglab_context* ctx, const char* document,
                                     deglab_report** out) {
  return run(ctx, out, [&](const deglab::CommandOptions& o) {
    return document ? deglab::cmd_analyze_functor(document, o) : missing("document");
  });
}

deglab_status deglab_compare(deglab_context* ctx, const char* first, const char* second,
                             deglab_report** out) {
  return run(ctx, out, [&](const deglab::CommandOptions& o) {
    if (!first || !second) return missing("document");
    return deglab::cmd_compare(first, second, o);
  });
}

deglab_status deglab_search(deglab_context* ctx, const char* what, deglab_report** out) {
  return run(ctx, out, [&](const deglab::CommandOptions& o) {
    return what ? deglab::cmd_search(what, o) : missing("what");
  });
}

deglab_status deglab_enumerate(deglab_context* ctx, const char* what, size_t size,
                               deglab_report** out) {
  return run(ctx, out, [&](const deglab::CommandOptions& o) {
    if (!what) return missing("what");
    return deglab::cmd_enumerate(what, size ? std::optional<std::size_t>(size) : std::nullopt, o);
  });
}

deglab_status deglab_run_suite(deglab_context* ctx, const char* name, deglab_report** out) {
  return run(ctx, out, [&](const deglab::CommandOptions& o) {
    return name ? deglab::cmd_suite(name, o) : missing("name");
  });
}

deglab_status deglab_report_status(const deglab_report* report) {
  return report ? report->status : DEGLAB_INPUT_ERROR;
}

const char* deglab_report_json(const deglab_report* report) {
  return report ? report->json.c_str() : nullptr;
}

const char* deglab_report_text(const deglab_report* report) {
  return report ? report->text.c_str() : nullptr;
}

const char* deglab_report_output(const deglab_report* report) {
  return report && report->output ? report->output->c_str() : nullptr;
}

void deglab_report_free(deglab_report* report) { delete report; }

const char* deglab_suite_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : deglab::suite_names()) s += n + "\n";
    return s;
  }();
  return names.c_str();
}

}  // extern "C"
