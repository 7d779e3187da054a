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

#include "diffprim/multipoly.hpp"

namespace diffprim {

// Quotient of two polynomials. The stored pair is not kept reduced; equality
// is decided by cross-multiplication, so it never depends on gcd success.
class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(MultiPoly num) : num_(std::move(num)), den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}
  // Throws Error(DivisionByZero) when den is zero.
  RatFunc(MultiPoly num, MultiPoly den);

  static RatFunc variable(const Symbol& s) { return RatFunc(MultiPoly::variable(s)); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  std::set<Symbol> symbols() const;

  RatFunc& operator+=(const RatFunc& rhs);
  RatFunc& operator-=(const RatFunc& rhs);
  RatFunc& operator*=(const RatFunc& rhs);
  RatFunc& operator/=(const RatFunc& rhs);
  RatFunc operator-() const { return RatFunc(-num_, den_); }

  friend RatFunc operator+(RatFunc lhs, const RatFunc& rhs) { return lhs += rhs; }
  friend RatFunc operator-(RatFunc lhs, const RatFunc& rhs) { return lhs -= rhs; }
  friend RatFunc operator*(RatFunc lhs, const RatFunc& rhs) { return lhs *= rhs; }
  friend RatFunc operator/(RatFunc lhs, const RatFunc& rhs) { return lhs /= rhs; }

  // a/b == c/d iff a*d - b*c == 0.
  bool operator==(const RatFunc& rhs) const;

  RatFunc pow(unsigned exponent) const;
  // Quotient rule.
  RatFunc partial(const Symbol& s) const;

  // Throws Error(PoleAtPoint) if the denominator vanishes at the point.
  Rational evaluate(const std::map<Symbol, Rational>& point) const;

 private:
  MultiPoly num_;
  MultiPoly den_;
};

// Bounded work for the gcd pass of normalize().
struct GcdBudget {
  long max_steps = 20000;
};

// Removes rational content and, when the gcd pass finishes within budget,
// cancels common factors. The result has a denominator with coprime integer
// coefficients and positive leading coefficient. Equality class unchanged.
RatFunc normalize(const RatFunc& f, const GcdBudget& budget = {});

// Substitutes bound symbols; unbound symbols are kept. Throws
// Error(DenominatorVanished) if a denominator becomes identically zero.
RatFunc substitute(const MultiPoly& f, const std::map<Symbol, RatFunc>& bindings);
RatFunc substitute(const RatFunc& f, const std::map<Symbol, RatFunc>& bindings);

// "(num)/(den)"
std::string to_string(const RatFunc& f);

}  // namespace diffprim
