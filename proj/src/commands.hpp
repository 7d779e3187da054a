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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "diffprim/config.hpp"
#include "diffprim/parse.hpp"

namespace diffprim {

// A parsed field file with its named elements resolved.
struct LoadedField {
  FieldFile file;
  DiffFieldPresentation presentation;
  std::vector<std::pair<std::string, FieldElement>> elements;

  // Named elements first, then generators. Throws Error(UnknownVariable).
  FieldElement resolve(const std::string& name) const;
};

LoadedField load_field(const std::string& text);

struct RunSettings {
  SearchConfig search;
  std::string command;
};

struct Report {
  nlohmann::ordered_json machine;
  std::string human;
  int exit_code = 0;
};

Report run_trdeg(const LoadedField& f, const std::vector<std::string>& names, const RunSettings& s);
Report run_wronskian(const LoadedField& f, const std::vector<std::string>& names, const RunSettings& s);
Report run_wkl(int k, int l, const RunSettings& s);
Report run_density(const LoadedField& f, const std::string& a, const std::string& b,
                   const std::optional<std::string>& c, const RunSettings& s);
// Empty names means every generator of the field.
Report run_primitive(const LoadedField& f, const std::vector<std::string>& names, const RunSettings& s);
// order < 0 picks the trdeg of the tower element; deg_cap < 0 uses the config.
Report run_member(const LoadedField& f, const std::string& target, const std::string& tower, int order,
                  int deg_cap, const RunSettings& s);
Report run_verify_lemmas(int k_max, const RunSettings& s);

// Report for a failure before any command ran (bad input, option errors).
Report error_report(const RunSettings& s, int exit_code, const std::string& kind, const std::string& message);

}  // namespace diffprim
