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

#include "diffprim/error.hpp"

namespace diffprim {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DenominatorVanished: return "DenominatorVanished";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::ArgumentOutOfRange: return "ArgumentOutOfRange";
    case ErrorKind::RandomizationExhausted: return "RandomizationExhausted";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ConstantElement: return "ConstantElement";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::DecompositionFailed: return "DecompositionFailed";
    case ErrorKind::NoWitness: return "NoWitness";
    case ErrorKind::ConstantB: return "ConstantB";
    case ErrorKind::ZeroFactor: return "ZeroFactor";
    case ErrorKind::NoNonconstant: return "NoNonconstant";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::MissingDerivation: return "MissingDerivation";
    case ErrorKind::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorKind::DuplicateDefinition: return "DuplicateDefinition";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace diffprim
