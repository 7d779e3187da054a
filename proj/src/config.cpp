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

#include "diffprim/config.hpp"

#include "diffprim/error.hpp"

namespace diffprim {

void SearchConfig::validate() const {
  if (max_p_degree <= 0 || max_coeff_height <= 0 || lambda_height <= 0 || retries <= 0 ||
      membership_degree_cap <= 0) {
    throw Error(ErrorKind::InvalidArgument, "search caps must be positive");
  }
}

}  // namespace diffprim
