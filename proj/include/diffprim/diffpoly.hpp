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

#include <map>
#include <string>
#include <variant>

#include "diffprim/field.hpp"
#include "diffprim/multipoly.hpp"
#include "diffprim/unipoly.hpp"

namespace diffprim {

// (base, order) pair: x, x', x'', ...
using DerivSymbol = Symbol;

// Differential polynomial over Q. The variables of the body are derivative
// symbols; Lambda_i live in the same space as DerivSymbol(lambda_base, i).
class DiffPoly {
 public:
  DiffPoly() = default;
  explicit DiffPoly(MultiPoly body) : body_(std::move(body)) {}
  DiffPoly(const Rational& c) : body_(c) {}
  DiffPoly(int c) : body_(c) {}

  static DiffPoly indeterminate(const std::string& base, unsigned order = 0) {
    return DiffPoly(MultiPoly::variable(Symbol(base, order)));
  }

  const MultiPoly& body() const { return body_; }
  bool is_zero() const { return body_.is_zero(); }
  // Highest derivative order of base present, -1 if absent.
  int order_of(const std::string& base) const;

  DiffPoly& operator+=(const DiffPoly& rhs) { body_ += rhs.body_; return *this; }
  DiffPoly& operator-=(const DiffPoly& rhs) { body_ -= rhs.body_; return *this; }
  DiffPoly& operator*=(const DiffPoly& rhs) { body_ *= rhs.body_; return *this; }
  DiffPoly operator-() const { return DiffPoly(-body_); }
  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(DiffPoly a, const DiffPoly& b) { return a *= b; }
  DiffPoly pow(unsigned e) const { return DiffPoly(body_.pow(e)); }

  bool operator==(const DiffPoly& rhs) const { return body_ == rhs.body_; }

 private:
  MultiPoly body_;
};

std::string to_string(const DiffPoly& q);

// Extension of a derivation to Lambda symbols: Lambda_i' = weight * Lambda_{i+1}.
// The weight is either a derivative symbol (typically b', staying inside the
// differential polynomial ring) or a concrete field element.
struct LambdaConfig {
  std::string lambda_base = "Lambda";
  std::variant<DerivSymbol, FieldElement> weight = DerivSymbol("b", 1);
};

// The derivation x^(i) -> x^(i+1) extended by linearity and Leibniz.
DiffPoly formal_derive(const DiffPoly& q, unsigned times = 1);

// Acts as formal_derive on ordinary symbols and as Lambda_i -> weight *
// Lambda_{i+1} on Lambda symbols. Requires a symbolic weight.
DiffPoly lambda_derive(const DiffPoly& q, const LambdaConfig& cfg);

// The same derivation on E(Lambda_0, Lambda_1, ...): q is a rational function
// in field generators and Lambda symbols; generators are differentiated by
// the field derivation. Requires a FieldElement weight.
RatFunc lambda_derive(const RatFunc& q, const LambdaConfig& cfg, const DiffFieldPresentation& field);

// sum_{i=0..n} Lambda_{i+1} * dq/dLambda_i
DiffPoly t_operator(const DiffPoly& q, unsigned n, const std::string& lambda_base = "Lambda");

// Replaces each DerivSymbol(base, i) by the i-th field derivative of the
// element bound to base. Order-0 symbols naming field generators may stay
// unbound and denote themselves.
FieldElement diff_substitute(const DiffPoly& q, const std::map<std::string, FieldElement>& binding,
                             const DiffFieldPresentation& field);
FieldElement diff_substitute(const RatFunc& q, const std::map<std::string, FieldElement>& binding,
                             const DiffFieldPresentation& field);

// phi_p: Lambda_i -> p^(i)(b), other symbols as in diff_substitute.
FieldElement phi_p(const DiffPoly& q, const UniPoly& p, const FieldElement& b, const DiffFieldPresentation& field,
                   const std::map<std::string, FieldElement>& binding = {},
                   const std::string& lambda_base = "Lambda");
FieldElement phi_p(const RatFunc& q, const UniPoly& p, const FieldElement& b, const DiffFieldPresentation& field,
                   const std::map<std::string, FieldElement>& binding = {},
                   const std::string& lambda_base = "Lambda");

}  // namespace diffprim
