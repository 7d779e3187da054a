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

// Runs the installed binary; the core library is linked only for oracles.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

#include "diffprim/diffpoly.hpp"

namespace {

struct Run {
  std::string out;
  int exit_code;
};

Run run(const std::string& args) {
  std::string cmd = std::string(DIFFPRIM_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

nlohmann::ordered_json run_json(const std::string& args, int expected_exit) {
  Run r = run("--format machine " + args);
  CHECK(r.exit_code == expected_exit);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["exit_code"] == expected_exit);
  return j;
}

const std::string kField = DIFFPRIM_DATA "/example.field";

}  // namespace

TEST_CASE("primitive on the example field") {
  auto j = run_json("primitive " + kField, 0);
  CHECK(j["command"] == "--format machine primitive " + kField);
  CHECK(j["result"]["primitive"] == "(x^2 + y)/(1)");
  CHECK(j["result"]["certificates"][0]["P"] == "1/2*z'");
  CHECK(j["result"]["certificates"][1]["P"] == "1/2*z*z'' - 1/4*z'^2");
  CHECK(j["result"]["revalidated"] == true);

  Run human = run("primitive " + kField);
  CHECK(human.exit_code == 0);
  CHECK(human.out.find("status: ok (exit 0, ") != std::string::npos);
}

TEST_CASE("wkl output matches an independent product") {
  using diffprim::DiffPoly;
  DiffPoly x = DiffPoly::indeterminate("x"), y = DiffPoly::indeterminate("y");
  DiffPoly x1 = DiffPoly::indeterminate("x", 1), y1 = DiffPoly::indeterminate("y", 1);
  // Rendering is canonical, so equal strings mean equal polynomials.
  std::string expected = diffprim::to_string((x - y).pow(2) * (x1 + y1));
  auto j = run_json("wkl --k 2 --l 3", 0);
  CHECK(j["result"]["W"] == expected);
  CHECK(j["result"]["decomposition"]["reassembles"] == true);
}

TEST_CASE("trdeg and stabilization") {
  auto j = run_json("trdeg " + kField + " --elements b", 0);
  CHECK(j["result"]["trdeg"] == 1);
  CHECK(j["result"]["stabilization_order"] == 0);
  j = run_json("trdeg " + kField + " --elements a", 0);
  CHECK(j["result"]["trdeg"] == 2);
  CHECK(j["result"]["stabilization_order"] == 1);
}

TEST_CASE("exit codes") {
  CHECK(run("member " + kField + " --target y --tower a").exit_code == 0);
  auto j = run_json("member " + kField + " --target x --tower b --deg-cap 2", 1);
  CHECK(j["error"]["kind"] == "NotFound");
  j = run_json("density " + kField + " --a a --b b", 2);
  CHECK(j["error"]["kind"] == "ConstantB");
  j = run_json("trdeg /nonexistent/file.field --elements a", 2);
  CHECK(j["error"]["kind"] == "IoError");
  CHECK(run("wkl --k 1 --l 3").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("--max-p-degree 0 wkl --k 2 --l 3").exit_code == 2);
  CHECK(run("verify-lemmas --k-max 3").exit_code == 0);
}

TEST_CASE("machine output is byte-identical across runs") {
  for (const char* args : {"primitive ", "density --a a --b x "}) {
    std::string a = run(std::string("--format machine --seed 11 ") + args + kField).out;
    std::string b = run(std::string("--format machine --seed 11 ") + args + kField).out;
    CHECK(!a.empty());
    CHECK(a == b);
  }
}
