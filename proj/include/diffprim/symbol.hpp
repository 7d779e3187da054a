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

#include <compare>
#include <string>

namespace diffprim {

// A polynomial variable. Plain variables have order 0; the derivative
// variables of a differential polynomial ring are (base, order) pairs in the
// same space, so one polynomial engine serves both.
struct Symbol {
  std::string base;
  unsigned order = 0;

  Symbol() = default;
  Symbol(std::string b, unsigned o = 0) : base(std::move(b)), order(o) {}

  auto operator<=>(const Symbol&) const = default;
  bool operator==(const Symbol&) const = default;

  Symbol derivative(unsigned times = 1) const { return {base, order + times}; }
};

// x, x', x'', x''', x^(4), x^(5), ...
std::string to_string(const Symbol& s);

bool is_valid_var_name(const std::string& name);

}  // namespace diffprim
