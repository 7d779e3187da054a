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
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "diffprim/rational.hpp"
#include "diffprim/symbol.hpp"

namespace diffprim {

// A power product of symbols. Factors are kept sorted by symbol with strictly
// positive exponents; the empty product is the monomial 1.
class Monomial {
 public:
  using Factor = std::pair<Symbol, unsigned>;

  Monomial() = default;
  explicit Monomial(Symbol s, unsigned exponent = 1);
  // Sorts, merges repeated symbols and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const { return degree_; }
  unsigned exponent(const Symbol& s) const;
  bool is_one() const { return factors_.empty(); }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Requires divides(other).
  Monomial quotient(const Monomial& divisor) const;
  Monomial with_exponent(const Symbol& s, unsigned exponent) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

// Graded lexicographic order: total degree first, then the exponent of the
// alphabetically smallest symbol where the two monomials differ.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

std::string to_string(const Monomial& m);

// Sparse multivariate polynomial with exact rational coefficients. No zero
// coefficient is ever stored, so the empty map is the zero polynomial and
// structural equality is mathematical equality.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  MultiPoly() = default;
  MultiPoly(const Rational& constant);
  MultiPoly(long constant) : MultiPoly(Rational(constant)) {}
  MultiPoly(int constant) : MultiPoly(Rational(constant)) {}

  static MultiPoly variable(const Symbol& s);
  static MultiPoly variable(const std::string& name) { return variable(Symbol(name)); }
  static MultiPoly term(const Monomial& m, const Rational& coeff);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  // Largest term in grlex order. Requires !is_zero().
  const TermMap::value_type& leading_term() const { return *terms_.rbegin(); }

  unsigned total_degree() const;
  unsigned degree_in(const Symbol& s) const;
  std::set<Symbol> symbols() const;
  bool contains(const Symbol& s) const;

  void add_term(const Monomial& m, const Rational& coeff);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& rhs);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend MultiPoly operator*(const Rational& lhs, MultiPoly rhs) { return rhs *= lhs; }

  bool operator==(const MultiPoly& rhs) const;

  MultiPoly pow(unsigned exponent) const;
  MultiPoly partial(const Symbol& s) const;
  MultiPoly mul_monomial(const Monomial& m) const;

  // Views the polynomial as univariate in s: exponent -> coefficient.
  std::map<unsigned, MultiPoly> coefficients_in(const Symbol& s) const;

  // Every symbol must be bound. Throws Error(InvalidArgument) otherwise.
  Rational evaluate(const std::map<Symbol, Rational>& point) const;

 private:
  TermMap terms_;
};

// Canonical text: terms in descending grlex order, explicit '*', '^' for
// powers, e.g. "x^2 + 3*x*y - 1/2".
std::string to_string(const MultiPoly& p);

// Quotient a/b when b divides a exactly in Q[symbols], nullopt otherwise.
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);

// Rational content c with sign of the leading coefficient, so that p / c has
// coprime integer coefficients and a positive leading coefficient. Zero for
// the zero polynomial.
Rational rational_content(const MultiPoly& p);

}  // namespace diffprim
