// Copyright 2026 The diffprim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DIFFPRIM_DIFFPRIM_H_
#define DIFFPRIM_DIFFPRIM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DP_API __declspec(dllexport)
#else
#define DP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dp_field dp_field;
typedef struct dp_config dp_config;
typedef struct dp_report dp_report;

// Values double as process exit codes.
typedef enum dp_status {
  DP_OK = 0,
  DP_NOT_ESTABLISHED = 1,  // search cap exhausted, no certificate, failed check
  DP_INPUT_ERROR = 2,      // parse or validation failure
  DP_INTERNAL_ERROR = 3,
} dp_status;

typedef enum dp_format { DP_FORMAT_HUMAN = 0, DP_FORMAT_MACHINE = 1 } dp_format;

DP_API const char* dp_version(void);

// Message for the most recent failing call on this thread; "" if none.
DP_API const char* dp_last_error(void);
// Error kind of that call, e.g. "SyntaxError"; "" if none.
DP_API const char* dp_last_error_kind(void);

// Parses a field description. On failure returns DP_INPUT_ERROR, leaves *out
// null and sets dp_last_error to "line:column: message".
DP_API dp_status dp_field_parse(const char* text, dp_field** out);
DP_API void dp_field_free(dp_field* field);
DP_API size_t dp_field_generator_count(const dp_field* field);
// Borrowed pointer valid for the lifetime of the field; null if out of range.
DP_API const char* dp_field_generator(const dp_field* field, size_t index);

DP_API dp_config* dp_config_new(void);
DP_API void dp_config_free(dp_config* config);
// Keys: max_p_degree, max_coeff_height, lambda_height, retries,
// membership_degree_cap, symbolic_confirm, symbolic_rank.
DP_API dp_status dp_config_set_int(dp_config* config, const char* key, long long value);
DP_API dp_status dp_config_get_int(const dp_config* config, const char* key, long long* value);
DP_API void dp_config_set_seed(dp_config* config, uint64_t seed);
// Echoed verbatim into reports.
DP_API void dp_config_set_command(dp_config* config, const char* command);

// Every run function stores a report in *out (also on failure, except for
// null arguments) and returns its status. config may be null for defaults.
DP_API dp_status dp_run_trdeg(const dp_field* field, const char* const* names, size_t count,
                              const dp_config* config, dp_report** out);
DP_API dp_status dp_run_wronskian(const dp_field* field, const char* const* names, size_t count,
                                  const dp_config* config, dp_report** out);
DP_API dp_status dp_run_wkl(int k, int l, const dp_config* config, dp_report** out);
// c may be null for the plain density step.
DP_API dp_status dp_run_density(const dp_field* field, const char* a, const char* b, const char* c,
                                const dp_config* config, dp_report** out);
// count == 0 uses every generator of the field.
DP_API dp_status dp_run_primitive(const dp_field* field, const char* const* names, size_t count,
                                  const dp_config* config, dp_report** out);
// order < 0: the trdeg of the tower element. deg_cap < 0: the config cap.
DP_API dp_status dp_run_member(const dp_field* field, const char* target, const char* tower, int order,
                               int deg_cap, const dp_config* config, dp_report** out);
DP_API dp_status dp_run_verify_lemmas(int k_max, const dp_config* config, dp_report** out);
// Report for a failure detected by the caller, e.g. a bad option.
DP_API dp_report* dp_report_error(dp_status status, const char* kind, const char* message,
                                  const dp_config* config);

DP_API dp_status dp_report_status(const dp_report* report);
// Borrowed pointer valid until dp_report_free.
DP_API const char* dp_report_text(dp_report* report, dp_format format);
DP_API void dp_report_free(dp_report* report);

#ifdef __cplusplus
}
#endif

#endif  // DIFFPRIM_DIFFPRIM_H_
