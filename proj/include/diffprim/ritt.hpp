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

#include <cstddef>
#include <optional>
#include <vector>

#include "diffprim/config.hpp"
#include "diffprim/diffpoly.hpp"
#include "diffprim/unipoly.hpp"

namespace diffprim {

// Deterministic enumeration of nonconstant candidate polynomials p in Q[t]:
// degree ascending, then coefficient height ascending, then lexicographic in
// (c_d, ..., c_0) with coefficient values ordered 0, 1, -1, 2, -2, ...
// A first pass yields integer coefficients up to max_height; a second pass
// yields the same polynomials divided by 2, 3 and 4 (skipping duplicates).
class CandidateEnumerator {
 public:
  CandidateEnumerator(int max_degree, int max_height);

  std::optional<UniPoly> next();
  // Number of candidates produced so far.
  std::size_t produced() const { return produced_; }

 private:
  bool advance();
  bool start_block();
  bool valid() const;

  int max_degree_;
  int max_height_;
  int denominator_ = 1;
  int degree_ = 1;
  int height_ = 1;
  std::vector<int> digits_;  // digits_[0] is the leading coefficient
  bool fresh_block_ = true;
  bool done_ = false;
  std::size_t produced_ = 0;
};

// Value of the i-th coefficient in enumeration order: 0, 1, -1, 2, -2, ...
long candidate_value(int index);

// Finds p with q(p(f)) != 0 for a nonzero differential polynomial q in one
// indeterminate and a nonconstant f. Throws Error(ZeroPolynomial),
// Error(ConstantElement), Error(InvalidArgument) if q has several
// indeterminates, or Error(CapExceeded) when the caps are exhausted.
UniPoly ritt_witness(const DiffPoly& q, const FieldElement& f, const DiffFieldPresentation& field,
                     const SearchConfig& cfg);

}  // namespace diffprim
