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

#include <string>
#include <vector>

#include "diffprim/rational.hpp"
#include "diffprim/ratfunc.hpp"

namespace diffprim {

// Dense univariate polynomial over Q; coefficient i multiplies t^i. Trailing
// zeros are trimmed so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  static UniPoly monomial(unsigned degree, const Rational& coeff = 1);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  UniPoly derivative(unsigned times = 1) const;
  // Horner evaluation at a rational function.
  RatFunc evaluate(const RatFunc& at) const;
  Rational evaluate(const Rational& at) const;

  bool operator==(const UniPoly&) const = default;

 private:
  std::vector<Rational> coeffs_;
};

std::string to_string(const UniPoly& p, const std::string& var = "t");

}  // namespace diffprim
