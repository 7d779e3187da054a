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

#include <stdexcept>
#include <string>
#include <string_view>

namespace diffprim {

enum class ErrorKind {
  DivisionByZero,
  DenominatorVanished,
  PoleAtPoint,
  ArgumentOutOfRange,
  RandomizationExhausted,
  ZeroPolynomial,
  ConstantElement,
  CapExceeded,
  DecompositionFailed,
  NoWitness,
  ConstantB,
  ZeroFactor,
  NoNonconstant,
  SyntaxError,
  MissingDerivation,
  DuplicateGenerator,
  DuplicateDefinition,
  UnknownVariable,
  InvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so the C API and CLI can
// map it to a status code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failures additionally carry a 1-based position.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, int line, int column, const std::string& message)
      : Error(kind, message), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace diffprim
