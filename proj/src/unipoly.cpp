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

#include "diffprim/unipoly.hpp"

#include "diffprim/error.hpp"

namespace diffprim {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::monomial(unsigned degree, const Rational& coeff) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = coeff;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::derivative(unsigned times) const {
  std::vector<Rational> c = coeffs_;
  for (unsigned k = 0; k < times && !c.empty(); ++k) {
    for (std::size_t i = 1; i < c.size(); ++i) c[i - 1] = c[i] * static_cast<unsigned long>(i);
    c.pop_back();
  }
  return UniPoly(std::move(c));
}

RatFunc UniPoly::evaluate(const RatFunc& at) const {
  RatFunc acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + RatFunc(*it);
  }
  return acc;
}

Rational UniPoly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::string to_string(const UniPoly& p, const std::string& var) {
  MultiPoly mp;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    mp.add_term(Monomial(Symbol(var), static_cast<unsigned>(i)), p.coefficients()[i]);
  }
  return to_string(mp);
}

}  // namespace diffprim
