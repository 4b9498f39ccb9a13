/* Copyright 2026 The deglab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libdeglab. Inputs are JSON documents as NUL-terminated
 * UTF-8 strings; every call that does work produces a report handle owned by
 * the caller. Strings returned from a handle live as long as the handle. */

#ifndef DEGLAB_DEGLAB_H
#define DEGLAB_DEGLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DEGLAB_BUILDING_LIBRARY)
#define DEGLAB_API __declspec(dllexport)
#else
#define DEGLAB_API __declspec(dllimport)
#endif
#else
#define DEGLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum deglab_status {
  DEGLAB_OK = 0,              /* the verdict holds */
  DEGLAB_CLAIM_VIOLATED = 1,  /* an axiom or claim failed; see the report */
  DEGLAB_INPUT_ERROR = 2,     /* malformed input, unknown name, bad argument */
  DEGLAB_INTERNAL = 3
} deglab_status;

typedef struct deglab_context deglab_context;
typedef struct deglab_report deglab_report;

DEGLAB_API const char* deglab_version(void);
DEGLAB_API const char* deglab_status_string(deglab_status status);

DEGLAB_API deglab_context* deglab_context_new(void);
DEGLAB_API void deglab_context_free(deglab_context* ctx);
/* 0 restores the default bound. */
DEGLAB_API deglab_status deglab_context_set_bound(deglab_context* ctx, size_t bound);
DEGLAB_API deglab_status deglab_context_set_lax(deglab_context* ctx, int lax);
DEGLAB_API deglab_status deglab_context_set_seed(deglab_context* ctx, uint64_t seed);

/* On return *out is a report handle (also for errors) unless ctx or out is
 * NULL, in which case DEGLAB_INPUT_ERROR is returned and nothing allocated. */
DEGLAB_API deglab_status deglab_validate(deglab_context* ctx, const char* document,
                                         deglab_report** out);
/* target: "cmon", "ddbicat", "monoid", "category", "bicat" or "moncat". */
DEGLAB_API deglab_status deglab_shift(deglab_context* ctx, const char* document,
                                      const char* target, deglab_report** out);
DEGLAB_API deglab_status deglab_analyze_functor(deglab_context* ctx, const char* document,
                                                deglab_report** out);
DEGLAB_API deglab_status deglab_compare(deglab_context* ctx, const char* first,
                                        const char* second, deglab_report** out);
DEGLAB_API deglab_status deglab_search(deglab_context* ctx, const char* what,
                                       deglab_report** out);
/* size 0 means "use the bound". */
DEGLAB_API deglab_status deglab_enumerate(deglab_context* ctx, const char* what, size_t size,
                                          deglab_report** out);
DEGLAB_API deglab_status deglab_run_suite(deglab_context* ctx, const char* name,
                                          deglab_report** out);

DEGLAB_API deglab_status deglab_report_status(const deglab_report* report);
/* Canonical JSON, LF-terminated. */
DEGLAB_API const char* deglab_report_json(const deglab_report* report);
DEGLAB_API const char* deglab_report_text(const deglab_report* report);
/* Canonical JSON of the produced document, or NULL. */
DEGLAB_API const char* deglab_report_output(const deglab_report* report);
DEGLAB_API void deglab_report_free(deglab_report* report);

/* Newline-separated suite names; static storage. */
DEGLAB_API const char* deglab_suite_names(void);

#ifdef __cplusplus
}
#endif

#endif /* DEGLAB_DEGLAB_H */
