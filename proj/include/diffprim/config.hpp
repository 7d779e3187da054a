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

#include <cstdint>

namespace diffprim {

// Caps and seeds shared by the witness searches.
struct SearchConfig {
  int max_p_degree = 6;
  int max_coeff_height = 8;
  int lambda_height = 100;
  int retries = 32;
  std::uint64_t seed = 0;
  int membership_degree_cap = 8;
  bool symbolic_confirm = true;
  // Run every transcendence degree computation symbolically, not only the
  // final confirmation.
  bool symbolic_rank = false;

  // Throws Error(InvalidArgument) when a cap is not positive.
  void validate() const;
};

}  // namespace diffprim
