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

// Arithmetic mod the Mersenne prime 2^61 - 1, for exact filters that can
// only rule things out: reduction mod p never raises a rank or a gcd degree
// below what a surviving leading coefficient allows.

#ifndef DIFFPRIM_SRC_MODULAR_HPP_
#define DIFFPRIM_SRC_MODULAR_HPP_

#include <cstdint>
#include <map>
#include <optional>

#include "diffprim/multipoly.hpp"

namespace diffprim::modular {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(r & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(r >> 61);
  std::uint64_t s = lo + hi;
  return s >= kPrime ? s - kPrime : s;
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t inv_mod(std::uint64_t a) { return pow_mod(a, kPrime - 2); }

// nullopt when p divides the denominator.
inline std::optional<std::uint64_t> reduce_mod(const Rational& q) {
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  return mul_mod(mpz_fdiv_ui(q.get_num_mpz_t(), kPrime), inv_mod(den));
}

inline std::optional<std::uint64_t> eval_mod(const MultiPoly& p, const std::map<Symbol, std::uint64_t>& pt) {
  std::uint64_t total = 0;
  for (const auto& [m, c] : p.terms()) {
    auto v = reduce_mod(c);
    if (!v) return std::nullopt;
    std::uint64_t term = *v;
    for (const auto& [sym, e] : m.factors()) term = mul_mod(term, pow_mod(pt.at(sym), e));
    total = add_mod(total, term);
  }
  return total;
}

}  // namespace diffprim::modular

#endif  // DIFFPRIM_SRC_MODULAR_HPP_
