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

// Command-line front end. Talks to the library only through diffprim.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "diffprim/diffprim.h"

namespace {

struct ConfigDeleter {
  void operator()(dp_config* c) const { dp_config_free(c); }
};
struct FieldDeleter {
  void operator()(dp_field* f) const { dp_field_free(f); }
};
struct ReportDeleter {
  void operator()(dp_report* r) const { dp_report_free(r); }
};
using ConfigPtr = std::unique_ptr<dp_config, ConfigDeleter>;
using FieldPtr = std::unique_ptr<dp_field, FieldDeleter>;
using ReportPtr = std::unique_ptr<dp_report, ReportDeleter>;

int emit(dp_report* raw, dp_format format) {
  ReportPtr report(raw);
  if (!report) {
    std::cerr << "diffprim: " << dp_last_error() << "\n";
    return DP_INTERNAL_ERROR;
  }
  std::cout << dp_report_text(report.get(), format);
  dp_status status = dp_report_status(report.get());
  if (status == DP_INPUT_ERROR && format == DP_FORMAT_MACHINE) std::cerr << "diffprim: " << dp_last_error() << "\n";
  return status;
}

int input_error(const char* kind, const std::string& message, const dp_config* config, dp_format format) {
  return emit(dp_report_error(DP_INPUT_ERROR, kind, message.c_str(), config), format);
}

std::vector<const char*> c_strings(const std::vector<std::string>& v) {
  std::vector<const char*> out;
  for (const auto& s : v) out.push_back(s.c_str());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primitive elements of differential fields"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", dp_version());

  std::string format = "human";
  std::uint64_t seed = 0;
  bool symbolic = false;
  bool no_confirm = false;
  int max_p_degree = 6, max_coeff_height = 8, lambda_height = 100, retries = 32, membership_cap = 8;
  app.add_option("--seed", seed, "Seed for randomized steps");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "machine"}));
  app.add_flag("--symbolic", symbolic, "Compute every rank symbolically");
  app.add_flag("--no-symbolic-confirm", no_confirm, "Skip the symbolic confirmation of search results");
  app.add_option("--max-p-degree", max_p_degree, "Degree cap for candidate polynomials")->check(CLI::PositiveNumber);
  app.add_option("--max-coeff-height", max_coeff_height, "Coefficient height cap")->check(CLI::PositiveNumber);
  app.add_option("--lambda-height", lambda_height, "Height cap for sampled lambdas")->check(CLI::PositiveNumber);
  app.add_option("--retries", retries, "Retries for randomized steps")->check(CLI::PositiveNumber);
  app.add_option("--membership-degree-cap", membership_cap, "Degree cap for membership certificates")
      ->check(CLI::PositiveNumber);

  std::string file;
  std::vector<std::string> elements;
  std::string a, b, c, target, tower;
  int k = 0, l = 0, order = -1, deg_cap = -1, k_max = 4;

  auto* trdeg = app.add_subcommand("trdeg", "Transcendence degree of the differential field generated by elements");
  trdeg->add_option("file", file, "Field description")->required();
  trdeg->add_option("--elements", elements, "Element or generator names")->delimiter(',')->required();

  auto* wronsk = app.add_subcommand("wronskian", "Wronskian of field elements");
  wronsk->add_option("file", file, "Field description")->required();
  wronsk->add_option("--elements", elements, "Element or generator names")->delimiter(',')->required();

  auto* wkl = app.add_subcommand("wkl", "The determinant W_{k,l} and its decomposition");
  wkl->add_option("--k", k, "k >= 2")->required();
  wkl->add_option("--l", l, "1 <= l <= k + 1")->required();

  auto* density = app.add_subcommand("density", "Find p with trdeg k<a + p(b)> = trdeg k<a, b>");
  density->add_option("file", file, "Field description")->required();
  density->add_option("--a", a, "Element name")->required();
  density->add_option("--b", b, "Element name")->required();
  density->add_option("--c", c, "Optional factor: candidate a + c p(b)");

  auto* primitive = app.add_subcommand("primitive", "Primitive element with membership certificates");
  primitive->add_option("file", file, "Field description")->required();
  primitive->add_option("--elements", elements, "Generators of the subfield (default: all generators)")
      ->delimiter(',');

  auto* member = app.add_subcommand("member", "Certificate for target in k(z, z', ..., z^(N))");
  member->add_option("file", file, "Field description")->required();
  member->add_option("--target", target, "Element name")->required();
  member->add_option("--tower", tower, "Element name of z")->required();
  member->add_option("--order", order, "Tower order N (default: trdeg of z)")->check(CLI::NonNegativeNumber);
  member->add_option("--deg-cap", deg_cap, "Degree cap")->check(CLI::NonNegativeNumber);

  auto* lemmas = app.add_subcommand("verify-lemmas", "Check every Wronskian identity for k = 2..k-max");
  lemmas->add_option("--k-max", k_max, "Largest k")->check(CLI::Range(2, 8));

  std::string echo;
  for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "diffprim: " << e.what() << "\n";
    return DP_INPUT_ERROR;
  }

  ConfigPtr config(dp_config_new());
  dp_config_set_command(config.get(), echo.c_str());
  dp_config_set_seed(config.get(), seed);
  dp_config_set_int(config.get(), "symbolic_rank", symbolic);
  dp_config_set_int(config.get(), "symbolic_confirm", !no_confirm);
  dp_config_set_int(config.get(), "max_p_degree", max_p_degree);
  dp_config_set_int(config.get(), "max_coeff_height", max_coeff_height);
  dp_config_set_int(config.get(), "lambda_height", lambda_height);
  dp_config_set_int(config.get(), "retries", retries);
  dp_config_set_int(config.get(), "membership_degree_cap", membership_cap);
  const dp_format fmt = format == "machine" ? DP_FORMAT_MACHINE : DP_FORMAT_HUMAN;

  dp_report* report = nullptr;
  if (wkl->parsed()) {
    dp_run_wkl(k, l, config.get(), &report);
    return emit(report, fmt);
  }
  if (lemmas->parsed()) {
    dp_run_verify_lemmas(k_max, config.get(), &report);
    return emit(report, fmt);
  }

  std::ifstream in(file, std::ios::binary);
  if (!in) return input_error("IoError", "cannot read '" + file + "'", config.get(), fmt);
  std::ostringstream text;
  text << in.rdbuf();
  dp_field* raw_field = nullptr;
  if (dp_field_parse(text.str().c_str(), &raw_field) != DP_OK) {
    return input_error(dp_last_error_kind(), file + ":" + dp_last_error(), config.get(), fmt);
  }
  FieldPtr field(raw_field);
  auto names = c_strings(elements);

  if (trdeg->parsed()) {
    dp_run_trdeg(field.get(), names.data(), names.size(), config.get(), &report);
  } else if (wronsk->parsed()) {
    dp_run_wronskian(field.get(), names.data(), names.size(), config.get(), &report);
  } else if (density->parsed()) {
    dp_run_density(field.get(), a.c_str(), b.c_str(), c.empty() ? nullptr : c.c_str(), config.get(), &report);
  } else if (primitive->parsed()) {
    dp_run_primitive(field.get(), names.data(), names.size(), config.get(), &report);
  } else {
    dp_run_member(field.get(), target.c_str(), tower.c_str(), order, deg_cap, config.get(), &report);
  }
  return emit(report, fmt);
}
