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

#include "multimodular.hpp"

#include <cstdint>

namespace diffprim {

namespace {

// Primes just below 2^62, descending.
const std::vector<std::uint64_t>& primes() {
  static const std::vector<std::uint64_t> list = [] {
    std::vector<std::uint64_t> out;
    Integer c = (Integer(1) << 62) - 1;
    while (out.size() < 256) {
      if (mpz_probab_prime_p(c.get_mpz_t(), 30)) out.push_back(c.get_ui());
      c -= 2;
    }
    return out;
  }();
  return list;
}

struct Zp {
  std::uint64_t p;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
  std::uint64_t inv(std::uint64_t a) const {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  std::optional<std::uint64_t> reduce(const Rational& q) const {
    std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (den == 0) return std::nullopt;
    return mul(mpz_fdiv_ui(q.get_num_mpz_t(), p), inv(den));
  }
};

// Kernel vector mod p with last entry 1, if the kernel has that shape.
std::optional<std::vector<std::uint64_t>> kernel_mod(const Matrix<Rational>& a, const Zp& f) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  std::vector<std::vector<std::uint64_t>> m(a.size(), std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      auto v = f.reduce(a[r][c]);
      if (!v) return std::nullopt;
      m[r][c] = *v;
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) {
      if (c + 1 < cols) return std::nullopt;
      continue;
    }
    if (c + 1 == cols) return std::nullopt;
    std::swap(m[pivot], m[rank]);
    const std::uint64_t inv = f.inv(m[rank][c]);
    for (std::size_t k = c; k < cols; ++k) m[rank][k] = f.mul(m[rank][k], inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::uint64_t g = f.neg(m[r][c]);
      for (std::size_t k = c; k < cols; ++k) m[r][k] = f.add(m[r][k], f.mul(g, m[rank][k]));
    }
    ++rank;
  }
  if (rank + 1 != cols) return std::nullopt;
  std::vector<std::uint64_t> v(cols);
  for (std::size_t r = 0; r + 1 < cols; ++r) v[r] = f.neg(m[r][cols - 1]);
  v[cols - 1] = 1;
  return v;
}

}  // namespace

std::optional<Rational> rational_reconstruction(const Integer& u, const Integer& m) {
  Integer bound;
  mpz_fdiv_q_2exp(bound.get_mpz_t(), m.get_mpz_t(), 1);
  mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
  Integer r0 = m, r1, s0 = 0, s1 = 1, q, t;
  mpz_fdiv_r(r1.get_mpz_t(), u.get_mpz_t(), m.get_mpz_t());
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (abs(s1) > bound || gcd(r1, s1) != 1) return std::nullopt;
  Rational out(r1, s1);
  out.canonicalize();
  return out;
}

std::optional<std::vector<Rational>> kernel_vector_multimodular(
    const Matrix<Rational>& a, const std::function<bool(const std::vector<Rational>&)>& accept,
    std::size_t max_primes) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  if (cols == 0) return std::nullopt;
  std::vector<Integer> residues(cols, Integer(0));
  Integer modulus = 1;
  std::optional<std::vector<Rational>> previous;
  int bad = 0;
  for (std::size_t k = 0; k < max_primes && k < primes().size(); ++k) {
    const Zp f{primes()[k]};
    auto v = kernel_mod(a, f);
    if (!v) {
      // An unlucky prime is rare; a wrong shape every time means the
      // kernel really is not one-dimensional.
      if (++bad > 3) return std::nullopt;
      continue;
    }
    const std::uint64_t m_inv = f.inv(mpz_fdiv_ui(modulus.get_mpz_t(), f.p));
    for (std::size_t c = 0; c < cols; ++c) {
      std::uint64_t r = mpz_fdiv_ui(residues[c].get_mpz_t(), f.p);
      std::uint64_t delta = f.mul(f.add((*v)[c], f.neg(r)), m_inv);
      residues[c] += modulus * Integer(static_cast<unsigned long>(delta));
    }
    modulus *= Integer(static_cast<unsigned long>(f.p));
    std::vector<Rational> candidate;
    for (std::size_t c = 0; c < cols; ++c) {
      auto q = rational_reconstruction(residues[c], modulus);
      if (!q) break;
      candidate.push_back(*q);
    }
    if (candidate.size() != cols) {
      previous.reset();
      continue;
    }
    if (previous && *previous == candidate && accept(candidate)) return candidate;
    previous = std::move(candidate);
  }
  return std::nullopt;
}

}  // namespace diffprim
