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

#include "diffprim/ratfunc.hpp"

#include <algorithm>

#include "diffprim/error.hpp"
#include "diffprim/polygcd.hpp"

namespace diffprim {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::DivisionByZero, "rational function with zero denominator");
  if (den_.is_constant() && den_.constant_term() != 1) {
    num_ *= Rational(1 / den_.constant_term());
    den_ = MultiPoly(1);
  }
}

std::set<Symbol> RatFunc::symbols() const {
  auto out = num_.symbols();
  auto d = den_.symbols();
  out.insert(d.begin(), d.end());
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    *this = RatFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& rhs) {
  if (den_ == rhs.den_) {
    num_ -= rhs.num_;
  } else {
    *this = RatFunc(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
  }
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& rhs) {
  if (num_.is_zero()) return *this;
  if (rhs.num_.is_zero()) return *this = RatFunc();
  *this = RatFunc(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& rhs) {
  if (rhs.num_.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero rational function");
  *this = RatFunc(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

bool RatFunc::operator==(const RatFunc& rhs) const {
  if (den_ == rhs.den_) return num_ == rhs.num_;
  return num_ * rhs.den_ == rhs.num_ * den_;
}

RatFunc RatFunc::pow(unsigned exponent) const { return RatFunc(num_.pow(exponent), den_.pow(exponent)); }

RatFunc RatFunc::partial(const Symbol& s) const {
  if (den_.is_constant()) return RatFunc(num_.partial(s));
  MultiPoly dd = den_.partial(s);
  if (dd.is_zero()) return RatFunc(num_.partial(s), den_);
  return RatFunc(num_.partial(s) * den_ - num_ * dd, den_ * den_);
}

Rational RatFunc::evaluate(const std::map<Symbol, Rational>& point) const {
  Rational d = den_.evaluate(point);
  if (d == 0) throw Error(ErrorKind::PoleAtPoint, "denominator " + to_string(den_) + " vanishes at point");
  return num_.evaluate(point) / d;
}

RatFunc normalize(const RatFunc& f, const GcdBudget& budget) {
  if (f.is_zero()) return RatFunc();
  MultiPoly num = f.num();
  MultiPoly den = f.den();
  if (!den.is_constant()) {
    const auto ns = num.symbols();
    const auto ds = den.symbols();
    bool shared = std::any_of(ns.begin(), ns.end(), [&](const Symbol& s) { return ds.count(s) > 0; });
    if (shared) {
      if (auto g = poly_gcd(num, den, budget.max_steps); g && !g->is_constant()) {
        num = *exact_divide(num, *g);
        den = *exact_divide(den, *g);
      }
    }
  }
  Rational c = rational_content(den);
  Rational inv = 1 / c;
  num *= inv;
  den *= inv;
  return RatFunc(std::move(num), std::move(den));
}

namespace {

// Powers of a bound value n/d, cached per symbol.
struct PowerCache {
  std::vector<MultiPoly> num_pows{MultiPoly(1)};
  std::vector<MultiPoly> den_pows{MultiPoly(1)};
  const RatFunc* value = nullptr;
  unsigned max_exponent = 0;

  const MultiPoly& num_pow(unsigned e) {
    while (num_pows.size() <= e) num_pows.push_back(num_pows.back() * value->num());
    return num_pows[e];
  }
  const MultiPoly& den_pow(unsigned e) {
    while (den_pows.size() <= e) den_pows.push_back(den_pows.back() * value->den());
    return den_pows[e];
  }
};

}  // namespace

RatFunc substitute(const MultiPoly& f, const std::map<Symbol, RatFunc>& bindings) {
  std::map<Symbol, PowerCache> caches;
  for (const auto& [m, c] : f.terms()) {
    for (const auto& [sym, e] : m.factors()) {
      auto it = bindings.find(sym);
      if (it == bindings.end()) continue;
      auto& cache = caches[sym];
      cache.value = &it->second;
      cache.max_exponent = std::max(cache.max_exponent, e);
    }
  }
  // Each monomial is brought over the common denominator prod d_s^{E_s}.
  MultiPoly num;
  for (const auto& [m, c] : f.terms()) {
    MultiPoly term(c);
    std::vector<Monomial::Factor> kept;
    for (const auto& [sym, e] : m.factors()) {
      auto it = caches.find(sym);
      if (it == caches.end()) {
        kept.emplace_back(sym, e);
        continue;
      }
      term *= it->second.num_pow(e);
    }
    for (auto& [sym, cache] : caches) {
      unsigned e = m.exponent(sym);
      if (!cache.value->den().is_constant() && cache.max_exponent > e) {
        term *= cache.den_pow(cache.max_exponent - e);
      }
    }
    if (!kept.empty()) term = term.mul_monomial(Monomial::from_factors(std::move(kept)));
    num += term;
  }
  MultiPoly den(1);
  for (auto& [sym, cache] : caches) {
    if (!cache.value->den().is_constant()) den *= cache.den_pow(cache.max_exponent);
  }
  return RatFunc(std::move(num), std::move(den));
}

RatFunc substitute(const RatFunc& f, const std::map<Symbol, RatFunc>& bindings) {
  RatFunc n = substitute(f.num(), bindings);
  RatFunc d = substitute(f.den(), bindings);
  if (d.is_zero()) {
    throw Error(ErrorKind::DenominatorVanished,
                "denominator " + to_string(f.den()) + " vanishes under substitution");
  }
  return n / d;
}

std::string to_string(const RatFunc& f) { return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")"; }

}  // namespace diffprim
