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

#include "diffprim/diffprim.h"

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "commands.hpp"
#include "diffprim/error.hpp"

using diffprim::Report;
using diffprim::RunSettings;

struct dp_field {
  diffprim::LoadedField loaded;
};

struct dp_config {
  RunSettings settings;
};

struct dp_report {
  Report report;
  std::string machine_text;
};

namespace {

thread_local std::string g_last_error;
thread_local std::string g_last_error_kind;

dp_status set_error(dp_status status, const std::string& message, const std::string& kind = "InvalidArgument") {
  g_last_error = message;
  g_last_error_kind = kind;
  return status;
}

RunSettings settings_of(const dp_config* config) { return config ? config->settings : RunSettings{}; }

std::vector<std::string> names_of(const char* const* names, size_t count) {
  std::vector<std::string> out;
  for (size_t i = 0; i < count; ++i) out.emplace_back(names[i] ? names[i] : "");
  return out;
}

template <class F>
dp_status finish(dp_report** out, F&& run) {
  if (!out) return set_error(DP_INPUT_ERROR, "null output pointer");
  *out = nullptr;
  try {
    auto r = std::make_unique<dp_report>();
    r->report = run();
    auto status = static_cast<dp_status>(r->report.exit_code);
    if (status != DP_OK && r->report.machine.contains("error")) {
      set_error(status, r->report.machine["error"]["message"].get<std::string>(),
                r->report.machine["error"]["kind"].get<std::string>());
    }
    *out = r.release();
    return status;
  } catch (const std::exception& e) {
    return set_error(DP_INTERNAL_ERROR, e.what(), "Internal");
  }
}

}  // namespace

extern "C" {

const char* dp_version(void) { return "0.1.0"; }

const char* dp_last_error(void) { return g_last_error.c_str(); }

const char* dp_last_error_kind(void) { return g_last_error_kind.c_str(); }

dp_status dp_field_parse(const char* text, dp_field** out) {
  if (!out) return set_error(DP_INPUT_ERROR, "null output pointer");
  *out = nullptr;
  if (!text) return set_error(DP_INPUT_ERROR, "null input text");
  try {
    *out = new dp_field{diffprim::load_field(text)};
    set_error(DP_OK, "", "");
    return DP_OK;
  } catch (const diffprim::Error& e) {
    return set_error(DP_INPUT_ERROR, e.what(), std::string(diffprim::error_kind_name(e.kind())));
  } catch (const std::exception& e) {
    return set_error(DP_INTERNAL_ERROR, e.what(), "Internal");
  }
}

void dp_field_free(dp_field* field) { delete field; }

size_t dp_field_generator_count(const dp_field* field) {
  return field ? field->loaded.presentation.generators().size() : 0;
}

const char* dp_field_generator(const dp_field* field, size_t index) {
  if (!field || index >= field->loaded.presentation.generators().size()) return nullptr;
  return field->loaded.presentation.generators()[index].c_str();
}

dp_config* dp_config_new(void) { return new dp_config{}; }

void dp_config_free(dp_config* config) { delete config; }

dp_status dp_config_set_int(dp_config* config, const char* key, long long value) {
  if (!config || !key) return set_error(DP_INPUT_ERROR, "null argument");
  auto& c = config->settings.search;
  std::string k = key;
  if (k == "symbolic_confirm" || k == "symbolic_rank") {
    (k == "symbolic_confirm" ? c.symbolic_confirm : c.symbolic_rank) = value != 0;
    return DP_OK;
  }
  int* slot = k == "max_p_degree"            ? &c.max_p_degree
              : k == "max_coeff_height"      ? &c.max_coeff_height
              : k == "lambda_height"         ? &c.lambda_height
              : k == "retries"               ? &c.retries
              : k == "membership_degree_cap" ? &c.membership_degree_cap
                                             : nullptr;
  if (!slot) return set_error(DP_INPUT_ERROR, "unknown config key '" + k + "'");
  if (value < 1 || value > 1000000) return set_error(DP_INPUT_ERROR, k + " must lie in [1, 1000000]");
  *slot = static_cast<int>(value);
  return DP_OK;
}

dp_status dp_config_get_int(const dp_config* config, const char* key, long long* value) {
  if (!config || !key || !value) return set_error(DP_INPUT_ERROR, "null argument");
  const auto& c = config->settings.search;
  std::string k = key;
  if (k == "max_p_degree") *value = c.max_p_degree;
  else if (k == "max_coeff_height") *value = c.max_coeff_height;
  else if (k == "lambda_height") *value = c.lambda_height;
  else if (k == "retries") *value = c.retries;
  else if (k == "membership_degree_cap") *value = c.membership_degree_cap;
  else if (k == "symbolic_confirm") *value = c.symbolic_confirm;
  else if (k == "symbolic_rank") *value = c.symbolic_rank;
  else return set_error(DP_INPUT_ERROR, "unknown config key '" + k + "'");
  return DP_OK;
}

void dp_config_set_seed(dp_config* config, uint64_t seed) {
  if (config) config->settings.search.seed = seed;
}

void dp_config_set_command(dp_config* config, const char* command) {
  if (config) config->settings.command = command ? command : "";
}

dp_status dp_run_trdeg(const dp_field* field, const char* const* names, size_t count, const dp_config* config,
                       dp_report** out) {
  if (!field || (count && !names)) return set_error(DP_INPUT_ERROR, "null argument");
  return finish(out, [&] { return diffprim::run_trdeg(field->loaded, names_of(names, count), settings_of(config)); });
}

dp_status dp_run_wronskian(const dp_field* field, const char* const* names, size_t count, const dp_config* config,
                           dp_report** out) {
  if (!field || (count && !names)) return set_error(DP_INPUT_ERROR, "null argument");
  return finish(out,
                [&] { return diffprim::run_wronskian(field->loaded, names_of(names, count), settings_of(config)); });
}

dp_status dp_run_wkl(int k, int l, const dp_config* config, dp_report** out) {
  return finish(out, [&] { return diffprim::run_wkl(k, l, settings_of(config)); });
}

dp_status dp_run_density(const dp_field* field, const char* a, const char* b, const char* c, const dp_config* config,
                         dp_report** out) {
  if (!field || !a || !b) return set_error(DP_INPUT_ERROR, "null argument");
  std::optional<std::string> factor;
  if (c) factor = c;
  return finish(out, [&] { return diffprim::run_density(field->loaded, a, b, factor, settings_of(config)); });
}

dp_status dp_run_primitive(const dp_field* field, const char* const* names, size_t count, const dp_config* config,
                           dp_report** out) {
  if (!field || (count && !names)) return set_error(DP_INPUT_ERROR, "null argument");
  return finish(out,
                [&] { return diffprim::run_primitive(field->loaded, names_of(names, count), settings_of(config)); });
}

dp_status dp_run_member(const dp_field* field, const char* target, const char* tower, int order, int deg_cap,
                        const dp_config* config, dp_report** out) {
  if (!field || !target || !tower) return set_error(DP_INPUT_ERROR, "null argument");
  return finish(out, [&] {
    return diffprim::run_member(field->loaded, target, tower, order, deg_cap, settings_of(config));
  });
}

dp_status dp_run_verify_lemmas(int k_max, const dp_config* config, dp_report** out) {
  return finish(out, [&] { return diffprim::run_verify_lemmas(k_max, settings_of(config)); });
}

dp_report* dp_report_error(dp_status status, const char* kind, const char* message, const dp_config* config) {
  try {
    auto* r = new dp_report;
    r->report = diffprim::error_report(settings_of(config), static_cast<int>(status), kind ? kind : "Error",
                                       message ? message : "");
    return r;
  } catch (...) {
    return nullptr;
  }
}

dp_status dp_report_status(const dp_report* report) {
  return report ? static_cast<dp_status>(report->report.exit_code) : DP_INTERNAL_ERROR;
}

const char* dp_report_text(dp_report* report, dp_format format) {
  if (!report) return "";
  if (format == DP_FORMAT_HUMAN) return report->report.human.c_str();
  if (report->machine_text.empty()) report->machine_text = report->report.machine.dump(2) + "\n";
  return report->machine_text.c_str();
}

void dp_report_free(dp_report* report) { delete report; }

}  // extern "C"
