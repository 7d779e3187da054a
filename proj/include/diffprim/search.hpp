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
#include <utility>
#include <vector>

#include "diffprim/config.hpp"
#include "diffprim/field.hpp"
#include "diffprim/unipoly.hpp"

namespace diffprim {

struct DensityResult {
  UniPoly p;
  // Candidate is a + factor * p(b); factor is 1 for the plain density step.
  FieldElement factor{1};
  FieldElement candidate;
  std::size_t trdeg_pair = 0;
  std::size_t trdeg_candidate = 0;
  // Number of polynomials tried, including p = 0.
  std::size_t candidates_tried = 0;
};

struct PrimitiveResult {
  FieldElement primitive;
  std::size_t n = 0;
  std::vector<Rational> lambdas;
  std::vector<FieldElement> generators;
  std::vector<MembershipCertificate> certificates;
  // Density element and companion produced by reduce_to_two.
  FieldElement a, b;
};

// Finds p (p = 0 first, then the candidate enumeration) with
// trdeg k<a + p(b)> = trdeg k<a, b>. Throws Error(ConstantB) if b' = 0 and
// Error(CapExceeded) when the enumeration is exhausted.
DensityResult density_step(const FieldElement& a, const FieldElement& b, const DiffFieldPresentation& field,
                           const SearchConfig& cfg);

// Same with candidate a + c p(b). Throws Error(ZeroFactor) if c = 0.
DensityResult density_step_with_factor(const FieldElement& a, const FieldElement& b, const FieldElement& c,
                                       const DiffFieldPresentation& field, const SearchConfig& cfg);

// Folds the generators into a with trdeg k<a> = trdeg k<generators>, and a
// companion b with every generator in k(a, ..., a^(N), b, ..., b^(N)). A
// single generator gets b = 0; otherwise b is tried as each generator in
// turn, then as random combinations sum mu_i g_i.
std::pair<FieldElement, FieldElement> reduce_to_two(const std::vector<FieldElement>& generators,
                                                    const DiffFieldPresentation& field, const SearchConfig& cfg);

// Samples lambda_1..lambda_{n+2} and accepts z = b + sum lambda_i a^i once
// trdeg k<z> = n and both a and b are certified members of k(z, ..., z^(n)).
PrimitiveResult lambda_search(const FieldElement& a, const FieldElement& b, const DiffFieldPresentation& field,
                              const SearchConfig& cfg);

// reduce_to_two, then either a itself (if it already generates everything)
// or lambda_search. Certificates cover every input generator.
PrimitiveResult find_primitive(const std::vector<FieldElement>& generators, const DiffFieldPresentation& field,
                               const SearchConfig& cfg);

// Recomputes everything from scratch: trdeg values symbolically, every
// certificate exactly.
bool revalidate(const DensityResult& r, const FieldElement& a, const FieldElement& b,
                const DiffFieldPresentation& field);
bool revalidate(const PrimitiveResult& r, const DiffFieldPresentation& field);

}  // namespace diffprim
