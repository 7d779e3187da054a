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

#include "diffprim/multipoly.hpp"

namespace diffprim {

// Greatest common divisor in Q[symbols], computed recursively one symbol at a
// time by content / primitive part and primitive pseudo-remainder sequences.
// The result has coprime integer coefficients and a positive leading
// coefficient (gcd(0, 0) = 0). Returns nullopt if more than max_steps
// pseudo-division steps would be needed.
std::optional<MultiPoly> poly_gcd(const MultiPoly& a, const MultiPoly& b, long max_steps);

// Content of p viewed as a polynomial in s (gcd of its coefficients), in the
// same normalization as poly_gcd.
std::optional<MultiPoly> content_in(const MultiPoly& p, const Symbol& s, long max_steps);

// Pseudo-remainder of a by b, both viewed as univariate in s. Requires
// degree_in(b, s) > 0.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, const Symbol& s);

}  // namespace diffprim
