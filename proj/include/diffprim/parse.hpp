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
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diffprim/field.hpp"
#include "diffprim/ratfunc.hpp"

namespace diffprim {

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Number, Variable, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind = Kind::Number;
  Rational value;       // Number
  std::string name;     // Variable
  ExprPtr lhs, rhs;     // Neg uses lhs only; Pow uses lhs
  unsigned exponent = 0;  // Pow
  int line = 1;
  int column = 1;
};

// Grammar, loosest binding first:
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' exponent)?
//   exponent := INTEGER ('^' exponent)?        (right-associative)
//   atom   := INTEGER | IDENT | '(' expr ')'
// An integer literal divided by an integer literal folds into a rational
// literal. Throws ParseError(SyntaxError) with the 1-based position of the
// offending token.
ExprPtr parse_expr(std::string_view input, int line = 1, int column = 1);

// Structural rendering, e.g. "add(pow(x, 2), y)".
std::string to_string(const ExprNode& e);

// Throws ParseError(DivisionByZero) when dividing by an expression that is
// identically zero.
RatFunc to_ratfunc(const ExprNode& e);

struct FieldFile {
  struct Definition {
    std::string name;
    ExprPtr expr;
    int line = 0;
  };
  std::vector<std::string> generators;
  std::vector<Definition> derivations;
  std::vector<Definition> named_elements;

  DiffFieldPresentation presentation() const;
  // Named elements in declaration order.
  std::vector<std::pair<std::string, FieldElement>> elements() const;
};

// Line format: '#' comments, "generator <name>", "derivation <name> = <expr>",
// "element <name> = <expr>". LF or CRLF. Throws ParseError with kinds
// SyntaxError, MissingDerivation, DuplicateGenerator, DuplicateDefinition,
// UnknownVariable or DivisionByZero.
FieldFile parse_field_file(std::string_view input);

}  // namespace diffprim
