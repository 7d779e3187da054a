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

#include "diffprim/multipoly.hpp"

#include <algorithm>

#include "diffprim/error.hpp"

namespace diffprim {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Symbol s, unsigned exponent) {
  if (exponent > 0) {
    factors_.emplace_back(std::move(s), exponent);
    degree_ = exponent;
  }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (auto& [sym, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == sym) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(std::move(sym), e);
    }
    m.degree_ += e;
  }
  return m;
}

unsigned Monomial::exponent(const Symbol& s) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), s,
                             [](const Factor& f, const Symbol& key) { return f.first < key; });
  return (it != factors_.end() && it->first == s) ? it->second : 0;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& [sym, e] : factors_) {
    while (it != other.factors_.end() && it->first < sym) ++it;
    if (it == other.factors_.end() || it->first != sym || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  auto d = divisor.factors_.begin();
  for (const auto& [sym, e] : factors_) {
    unsigned sub = 0;
    if (d != divisor.factors_.end() && d->first == sym) {
      sub = d->second;
      ++d;
    }
    if (e > sub) out.factors_.emplace_back(sym, e - sub);
  }
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial Monomial::with_exponent(const Symbol& s, unsigned exponent) const {
  std::vector<Factor> f;
  f.reserve(factors_.size() + 1);
  for (const auto& factor : factors_) {
    if (factor.first != s) f.push_back(factor);
  }
  f.emplace_back(s, exponent);
  return from_factors(std::move(f));
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second;
      ++i;
      ++j;
    } else {
      // The smaller symbol is present in only one of them; that one is larger.
      return fb[j].first < fa[i].first;
    }
  }
  return i == fa.size() && j < fb.size();
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [sym, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += to_string(sym);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial(), constant);
}

MultiPoly MultiPoly::variable(const Symbol& s) {
  MultiPoly p;
  p.terms_.emplace(Monomial(s), Rational(1));
  return p;
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& coeff) {
  MultiPoly p;
  p.add_term(m, coeff);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

unsigned MultiPoly::degree_in(const Symbol& s) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(s));
  return d;
}

std::set<Symbol> MultiPoly::symbols() const {
  std::set<Symbol> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [sym, e] : m.factors()) out.insert(sym);
  }
  return out;
}

bool MultiPoly::contains(const Symbol& s) const {
  for (const auto& [m, c] : terms_) {
    if (m.exponent(s) > 0) return true;
  }
  return false;
}

void MultiPoly::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  MultiPoly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  Rational prod;
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) {
      prod = ca * cb;
      out.add_term(ma * mb, prod);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    terms_.clear();
  } else {
    for (auto& [m, c] : terms_) c *= rhs;
  }
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
  if (terms_.size() != rhs.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  for (; a != terms_.end(); ++a, ++b) {
    if (!(a->first == b->first) || a->second != b->second) return false;
  }
  return true;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::partial(const Symbol& s) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exponent(s);
    if (e == 0) continue;
    out.add_term(m.with_exponent(s, e - 1), c * e);
  }
  return out;
}

MultiPoly MultiPoly::mul_monomial(const Monomial& m) const {
  MultiPoly out;
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono * m, c);
  return out;
}

std::map<unsigned, MultiPoly> MultiPoly::coefficients_in(const Symbol& s) const {
  std::map<unsigned, MultiPoly> out;
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exponent(s);
    out[e].add_term(e == 0 ? m : m.with_exponent(s, 0), c);
  }
  return out;
}

Rational MultiPoly::evaluate(const std::map<Symbol, Rational>& point) const {
  std::map<Symbol, std::vector<Rational>> powers;
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (const auto& [sym, e] : m.factors()) {
      auto& table = powers[sym];
      if (table.empty()) {
        auto it = point.find(sym);
        if (it == point.end()) {
          throw Error(ErrorKind::InvalidArgument, "unbound symbol " + to_string(sym));
        }
        table.push_back(Rational(1));
        table.push_back(it->second);
      }
      while (table.size() <= e) table.push_back(table.back() * table[1]);
      value *= table[e];
    }
    total += value;
  }
  return total;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += to_string(m);
    } else {
      out += mag.get_str() + "*" + to_string(m);
    }
  }
  return out;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (b.is_constant()) {
    return a * Rational(1 / b.constant_term());
  }
  MultiPoly quotient;
  MultiPoly rest = a;
  const auto& [lead_m, lead_c] = b.leading_term();
  while (!rest.is_zero()) {
    const auto& [m, c] = rest.leading_term();
    if (!lead_m.divides(m)) return std::nullopt;
    Monomial qm = m.quotient(lead_m);
    Rational qc = c / lead_c;
    quotient.add_term(qm, qc);
    MultiPoly step = b.mul_monomial(qm);
    step *= qc;
    rest -= step;
  }
  return quotient;
}

Rational rational_content(const MultiPoly& p) {
  if (p.is_zero()) return Rational(0);
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational content{num_gcd, den_lcm};
  content.canonicalize();
  if (p.leading_term().second < 0) content = -content;
  return content;
}

}  // namespace diffprim
