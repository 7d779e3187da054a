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

#include "diffprim/rational.hpp"

#include <cctype>

#include "diffprim/error.hpp"

namespace diffprim {

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.erase(0, 1);
  }
  auto slash = body.find('/');
  std::string num = body.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::InvalidArgument, "malformed rational '" + text + "'");
  }
  Integer d(den);
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + text + "'");
  Rational q{Integer(num), d};
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

Integer height(const Rational& q) {
  Integer n = abs(q.get_num());
  return n > q.get_den() ? n : Integer(q.get_den());
}

}  // namespace diffprim
