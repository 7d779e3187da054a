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

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "diffprim/diffprim.h"

namespace {

const char* kPaperField =
    "generator x\n"
    "generator y\n"
    "derivation x = 1\n"
    "derivation y = 0\n"
    "element a = x^2 + y\n"
    "element b = y\n";

// Owns a field and config for one test body.
struct Session {
  dp_field* field = nullptr;
  dp_config* config = dp_config_new();
  explicit Session(const char* text = kPaperField) { REQUIRE(dp_field_parse(text, &field) == DP_OK); }
  ~Session() {
    dp_field_free(field);
    dp_config_free(config);
  }
};

nlohmann::ordered_json machine(dp_report* report) {
  auto j = nlohmann::ordered_json::parse(dp_report_text(report, DP_FORMAT_MACHINE));
  dp_report_free(report);
  return j;
}

}  // namespace

TEST_CASE("field parsing") {
  Session s;
  CHECK(dp_field_generator_count(s.field) == 2);
  CHECK(std::string(dp_field_generator(s.field, 0)) == "x");
  CHECK(std::string(dp_field_generator(s.field, 1)) == "y");
  CHECK(dp_field_generator(s.field, 2) == nullptr);

  dp_field* bad = nullptr;
  CHECK(dp_field_parse("generator x\n", &bad) == DP_INPUT_ERROR);
  CHECK(bad == nullptr);
  CHECK(std::string(dp_last_error_kind()) == "MissingDerivation");
  CHECK(std::string(dp_last_error()).find("1:") == 0);
  CHECK(dp_field_parse(nullptr, &bad) == DP_INPUT_ERROR);
  CHECK(dp_field_parse(kPaperField, nullptr) == DP_INPUT_ERROR);
  CHECK(std::string(dp_version()).size() > 0);
}

TEST_CASE("config keys") {
  dp_config* c = dp_config_new();
  long long v = 0;
  CHECK(dp_config_get_int(c, "membership_degree_cap", &v) == DP_OK);
  CHECK(v == 8);
  CHECK(dp_config_set_int(c, "max_p_degree", 3) == DP_OK);
  CHECK(dp_config_get_int(c, "max_p_degree", &v) == DP_OK);
  CHECK(v == 3);
  CHECK(dp_config_set_int(c, "max_p_degree", 0) == DP_INPUT_ERROR);
  CHECK(dp_config_set_int(c, "no_such_key", 1) == DP_INPUT_ERROR);
  CHECK(std::string(dp_last_error()).find("no_such_key") != std::string::npos);
  CHECK(dp_config_get_int(c, "no_such_key", &v) == DP_INPUT_ERROR);
  CHECK(dp_config_set_int(c, "symbolic_rank", 1) == DP_OK);
  CHECK(dp_config_get_int(c, "symbolic_rank", &v) == DP_OK);
  CHECK(v == 1);
  dp_config_free(c);
  dp_config_free(nullptr);
  dp_field_free(nullptr);
  dp_report_free(nullptr);
}

TEST_CASE("primitive element of the example field") {
  Session s;
  dp_config_set_command(s.config, "primitive example");
  dp_report* r = nullptr;
  REQUIRE(dp_run_primitive(s.field, nullptr, 0, s.config, &r) == DP_OK);
  CHECK(dp_report_status(r) == DP_OK);
  std::string human = dp_report_text(r, DP_FORMAT_HUMAN);
  CHECK(human.find("status: ok (exit 0") != std::string::npos);
  auto j = machine(r);
  CHECK(j["command"] == "primitive example");
  CHECK(j["status"] == "ok");
  CHECK(j["exit_code"] == 0);
  CHECK(j["result"]["primitive"] == "(x^2 + y)/(1)");
  REQUIRE(j["result"]["certificates"].size() == 2);
  CHECK(j["result"]["certificates"][0]["P"] == "1/2*z'");
  CHECK(j["result"]["certificates"][0]["Q"] == "1");
  CHECK(j["result"]["certificates"][1]["revalidated"] == true);
  CHECK(j["result"]["revalidated"] == true);
}

TEST_CASE("density, trdeg, wronskian and membership") {
  Session s;
  dp_report* r = nullptr;
  const char* x = "x";
  CHECK(dp_run_density(s.field, "a", x, nullptr, s.config, &r) == DP_OK);
  auto j = machine(r);
  CHECK(j["result"]["trdeg_candidate"] == j["result"]["trdeg_pair"]);
  CHECK(j["result"]["revalidated"] == true);

  const char* names[] = {"b"};
  CHECK(dp_run_trdeg(s.field, names, 1, s.config, &r) == DP_OK);
  j = machine(r);
  CHECK(j["result"]["trdeg"] == 1);
  CHECK(j["result"]["stabilization_order"] == 0);

  const char* pair[] = {"a", "b"};
  CHECK(dp_run_wronskian(s.field, pair, 2, s.config, &r) == DP_OK);
  CHECK(machine(r)["result"]["wronskian"] == "(-2*x*y)/(1)");

  CHECK(dp_run_member(s.field, "x", "a", -1, -1, s.config, &r) == DP_OK);
  CHECK(machine(r)["result"]["certificate"]["P"] == "1/2*z'");
  CHECK(dp_run_member(s.field, "x", "b", -1, 3, s.config, &r) == DP_NOT_ESTABLISHED);
  j = machine(r);
  CHECK(j["status"] == "not_established");
  CHECK(j["exit_code"] == 1);
  CHECK(j["error"]["kind"] == "NotFound");
}

TEST_CASE("errors come back as reports") {
  Session s;
  dp_report* r = nullptr;
  CHECK(dp_run_density(s.field, "a", "b", nullptr, s.config, &r) == DP_INPUT_ERROR);
  auto j = machine(r);
  CHECK(j["error"]["kind"] == "ConstantB");
  CHECK(j["exit_code"] == 2);

  CHECK(dp_run_density(s.field, "a", "nope", nullptr, s.config, &r) == DP_INPUT_ERROR);
  CHECK(machine(r)["error"]["kind"] == "UnknownVariable");

  CHECK(dp_run_wkl(1, 3, s.config, &r) == DP_INPUT_ERROR);
  dp_report_free(r);
  CHECK(dp_run_wkl(2, 3, s.config, nullptr) == DP_INPUT_ERROR);
  CHECK(dp_run_trdeg(nullptr, nullptr, 0, s.config, &r) == DP_INPUT_ERROR);

  dp_report* e = dp_report_error(DP_INPUT_ERROR, "InvalidArgument", "bad option", s.config);
  CHECK(dp_report_status(e) == DP_INPUT_ERROR);
  j = machine(e);
  CHECK(j["error"]["message"] == "bad option");
}

TEST_CASE("verify lemmas and caps") {
  dp_report* r = nullptr;
  CHECK(dp_run_verify_lemmas(3, nullptr, &r) == DP_OK);
  auto j = machine(r);
  CHECK(j["result"]["failed"] == 0);
  CHECK(j["result"]["passed"] == 18);

  Session s;
  REQUIRE(dp_config_set_int(s.config, "max_p_degree", 1) == DP_OK);
  REQUIRE(dp_config_set_int(s.config, "max_coeff_height", 1) == DP_OK);
  // y + p(x) with deg p <= 1 never has trdeg 2 when x' = 1 and y' = 0.
  CHECK(dp_run_density(s.field, "b", "x", nullptr, s.config, &r) == DP_NOT_ESTABLISHED);
  CHECK(machine(r)["error"]["kind"] == "CapExceeded");
}

TEST_CASE("machine reports are deterministic") {
  std::vector<std::string> outputs;
  for (int i = 0; i < 2; ++i) {
    Session s;
    dp_config_set_seed(s.config, 7);
    dp_report* r = nullptr;
    REQUIRE(dp_run_primitive(s.field, nullptr, 0, s.config, &r) == DP_OK);
    outputs.push_back(dp_report_text(r, DP_FORMAT_MACHINE));
    dp_report_free(r);
  }
  CHECK(outputs[0] == outputs[1]);
}
