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

#include <gmpxx.h>

#include <string>

namespace diffprim {

// Arbitrary-precision rationals. mpq_class keeps values canonical (reduced,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

// Parses "n" or "n/d" with optional leading '-'. Throws Error(InvalidArgument)
// on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

// max(|numerator|, denominator)
Integer height(const Rational& q);

}  // namespace diffprim
