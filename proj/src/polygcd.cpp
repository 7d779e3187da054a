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

#include "diffprim/polygcd.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "diffprim/error.hpp"
#include "diffprim/random.hpp"
#include "modular.hpp"

namespace diffprim {
namespace {

struct BudgetExhausted {};

class Stepper {
 public:
  explicit Stepper(long max_steps) : left_(max_steps) {}
  void tick() {
    if (--left_ < 0) throw BudgetExhausted{};
  }

 private:
  long left_;
};

MultiPoly unit_normal(const MultiPoly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / rational_content(p));
}

MultiPoly divide_or_die(const MultiPoly& a, const MultiPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw Error(ErrorKind::InvalidArgument, "internal: inexact division in gcd");
  return *q;
}

MultiPoly leading_coefficient_in(const MultiPoly& p, const Symbol& s, unsigned degree) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m.exponent(s) == degree) out.add_term(m.with_exponent(s, 0), c);
  }
  return out;
}

// With scale set, each step is made numerically primitive: the result is then
// the pseudo-remainder only up to a rational factor.
MultiPoly prem(const MultiPoly& a, const MultiPoly& b, const Symbol& s, Stepper* st, bool scale) {
  const unsigned db = b.degree_in(s);
  const MultiPoly lc = leading_coefficient_in(b, s, db);
  MultiPoly r = a;
  while (!r.is_zero()) {
    unsigned dr = r.degree_in(s);
    if (dr < db) break;
    if (st) st->tick();
    MultiPoly lr = leading_coefficient_in(r, s, dr);
    MultiPoly shifted = (lr * b).mul_monomial(Monomial(s, dr - db));
    r = lc * r - shifted;
    if (scale) r = unit_normal(r);
  }
  return r;
}

using Dense = std::vector<std::uint64_t>;

// Image of p as a dense univariate polynomial in s mod p, the other symbols
// set from pt. nullopt if a coefficient does not reduce or the leading
// coefficient in s vanishes.
std::optional<Dense> univariate_image(const MultiPoly& p, const Symbol& s, const std::map<Symbol, std::uint64_t>& pt) {
  using namespace modular;
  Dense out(p.degree_in(s) + 1, 0);
  for (const auto& [m, c] : p.terms()) {
    auto v = reduce_mod(c);
    if (!v) return std::nullopt;
    std::uint64_t term = *v;
    unsigned e_s = 0;
    for (const auto& [sym, e] : m.factors()) {
      if (sym == s) {
        e_s = e;
      } else {
        term = mul_mod(term, pow_mod(pt.at(sym), e));
      }
    }
    out[e_s] = add_mod(out[e_s], term);
  }
  if (out.back() == 0) return std::nullopt;
  return out;
}

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::size_t gcd_degree_mod(Dense a, Dense b) {
  using namespace modular;
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = inv_mod(b.back());
    while (a.size() >= b.size()) {
      const std::uint64_t f = mul_mod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub_mod(a[shift + i], mul_mod(f, b[i]));
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// True only if gcd(a, b) is certainly constant. A common factor of degree d
// in s keeps degree d in every image where the leading coefficients in s of
// a and b survive, so constant image gcds for every shared symbol prove it.
bool certainly_coprime(const MultiPoly& a, const MultiPoly& b) {
  const auto sa = a.symbols();
  const auto sb = b.symbols();
  std::set<Symbol> all(sa.begin(), sa.end());
  all.insert(sb.begin(), sb.end());
  Rng rng(0x676364);
  for (const auto& s : sa) {
    if (!sb.count(s)) continue;
    bool settled = false;
    for (int attempt = 0; attempt < 3 && !settled; ++attempt) {
      std::map<Symbol, std::uint64_t> pt;
      for (const auto& t : all) pt[t] = 1 + rng.next() % (modular::kPrime - 1);
      auto ia = univariate_image(a, s, pt);
      auto ib = univariate_image(b, s, pt);
      if (!ia || !ib) continue;
      if (gcd_degree_mod(*ia, *ib) > 0) return false;
      settled = true;
    }
    if (!settled) return false;
  }
  return true;
}

// gcd with a single term: the symbolwise least exponent over all terms.
MultiPoly monomial_gcd(const Monomial& m, const MultiPoly& p) {
  std::map<Symbol, unsigned> least;
  for (const auto& [sym, e] : m.factors()) least[sym] = e;
  for (const auto& [t, c] : p.terms()) {
    for (auto& [sym, e] : least) e = std::min(e, t.exponent(sym));
  }
  Monomial g;
  for (const auto& [sym, e] : least) {
    if (e) g = g.with_exponent(sym, e);
  }
  MultiPoly out;
  out.add_term(g, 1);
  return out;
}

Integer max_norm(const MultiPoly& p) {
  Integer best = 0;
  for (const auto& [m, c] : p.terms()) {
    Integer v = abs(c.get_num());
    if (v > best) best = v;
  }
  return best;
}

MultiPoly evaluate_at(const MultiPoly& p, const Symbol& s, const Integer& xi) {
  MultiPoly out;
  for (const auto& [m, c] : p.terms()) {
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), xi.get_mpz_t(), m.exponent(s));
    out.add_term(m.with_exponent(s, 0), c * Rational(power));
  }
  return out;
}

// Heuristic gcd of primitive integer polynomials: evaluate s at a large
// integer, recurse, and read the gcd back off the xi-adic digits. A result
// is returned only after it divides both inputs, which with
// xi > 2 min(|a|, |b|) + 2 makes it the gcd up to sign.
std::optional<MultiPoly> heu_gcd(const MultiPoly& a, const MultiPoly& b, Stepper& st) {
  st.tick();
  if (a.is_constant() && b.is_constant()) {
    Integer g = gcd(a.constant_term().get_num(), b.constant_term().get_num());
    return MultiPoly(Rational(g));
  }
  std::set<Symbol> all = a.symbols();
  for (const auto& t : b.symbols()) all.insert(t);
  const Symbol s = *all.begin();
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) > 40000) return std::nullopt;
    // The recursion returns primitive gcds, so the integer content of the
    // image gcd is put back by hand.
    MultiPoly ea = evaluate_at(a, s, xi), eb = evaluate_at(b, s, xi);
    if (ea.is_zero() || eb.is_zero()) return std::nullopt;
    const Rational ca = abs(rational_content(ea)), cb = abs(rational_content(eb));
    auto gamma = heu_gcd(ea * Rational(1 / ca), eb * Rational(1 / cb), st);
    if (!gamma) return std::nullopt;
    MultiPoly rest = *gamma * Rational(gcd(ca.get_num(), cb.get_num())), g;
    const Integer half = xi / 2;
    for (unsigned i = 0; !rest.is_zero(); ++i) {
      MultiPoly digit;
      for (const auto& [m, c] : rest.terms()) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), c.get_num_mpz_t(), xi.get_mpz_t());
        if (r > half) r -= xi;
        if (r != 0) digit.add_term(m, Rational(r));
      }
      if (!digit.is_zero()) g += digit.mul_monomial(Monomial(s, i));
      rest = (rest - digit) * Rational(Integer(1), xi);
    }
    if (!g.is_zero()) {
      g = unit_normal(g);
      if (exact_divide(a, g) && exact_divide(b, g)) return g;
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b, Stepper& st);

MultiPoly content_rec(const MultiPoly& p, const Symbol& s, Stepper& st) {
  MultiPoly g;
  for (const auto& [e, coeff] : p.coefficients_in(s)) {
    g = gcd_rec(g, coeff, st);
    if (g.is_constant() && !g.is_zero()) return MultiPoly(1);
  }
  return g;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b, Stepper& st) {
  st.tick();
  if (a.is_zero()) return unit_normal(b);
  if (b.is_zero()) return unit_normal(a);
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  if (a == b) return unit_normal(a);
  if (a.terms().size() == 1) return monomial_gcd(a.terms().begin()->first, b);
  if (b.terms().size() == 1) return monomial_gcd(b.terms().begin()->first, a);
  if (certainly_coprime(a, b)) return MultiPoly(1);
  if (auto h = heu_gcd(unit_normal(a), unit_normal(b), st)) return unit_normal(*h);

  const auto sa = a.symbols();
  const auto sb = b.symbols();
  for (const auto& s : sa) {
    if (!sb.count(s)) return gcd_rec(content_rec(a, s, st), b, st);
  }
  for (const auto& s : sb) {
    if (!sa.count(s)) return gcd_rec(a, content_rec(b, s, st), st);
  }

  const Symbol& s = *sa.begin();
  const MultiPoly ca = content_rec(a, s, st);
  const MultiPoly cb = content_rec(b, s, st);
  MultiPoly p = unit_normal(divide_or_die(a, ca));
  MultiPoly q = unit_normal(divide_or_die(b, cb));
  const MultiPoly c = gcd_rec(ca, cb, st);

  if (p.degree_in(s) < q.degree_in(s)) std::swap(p, q);
  MultiPoly g;
  while (true) {
    MultiPoly r = prem(p, q, s, &st, true);
    if (r.is_zero()) {
      g = q;
      break;
    }
    if (r.degree_in(s) == 0) {
      g = MultiPoly(1);
      break;
    }
    p = std::move(q);
    q = unit_normal(divide_or_die(r, content_rec(r, s, st)));
  }
  return unit_normal(c * g);
}

}  // namespace

std::optional<MultiPoly> poly_gcd(const MultiPoly& a, const MultiPoly& b, long max_steps) {
  Stepper st(max_steps);
  try {
    return gcd_rec(a, b, st);
  } catch (const BudgetExhausted&) {
    return std::nullopt;
  }
}

std::optional<MultiPoly> content_in(const MultiPoly& p, const Symbol& s, long max_steps) {
  Stepper st(max_steps);
  try {
    return content_rec(p, s, st);
  } catch (const BudgetExhausted&) {
    return std::nullopt;
  }
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, const Symbol& s) {
  if (b.degree_in(s) == 0) {
    throw Error(ErrorKind::InvalidArgument, "pseudo_remainder: divisor free of " + to_string(s));
  }
  return prem(a, b, s, nullptr, false);
}

}  // namespace diffprim
