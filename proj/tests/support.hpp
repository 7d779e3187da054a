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

// Random generators and independent oracles shared by the test binaries.
// Nothing here calls the elimination or membership code under test.

#pragma once

#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "diffprim/diffpoly.hpp"
#include "diffprim/field.hpp"
#include "diffprim/linalg.hpp"
#include "diffprim/random.hpp"
#include "diffprim/unipoly.hpp"

namespace testing {

using namespace diffprim;

inline Rational small_rational(Rng& rng, long height = 5) {
  long num = rng.uniform(-height, height);
  long den = rng.uniform(1, height);
  Rational q(num, static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

// Nonzero unless allow_zero.
inline MultiPoly random_poly(Rng& rng, const std::vector<Symbol>& vars, unsigned max_degree, int max_terms,
                             long height = 5, bool allow_zero = false) {
  for (;;) {
    MultiPoly p;
    int terms = static_cast<int>(rng.uniform(1, max_terms));
    for (int t = 0; t < terms; ++t) {
      MultiPoly m(small_rational(rng, height));
      unsigned budget = static_cast<unsigned>(rng.uniform(0, max_degree));
      for (unsigned d = 0; d < budget; ++d) {
        m *= MultiPoly::variable(vars[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(vars.size()) - 1))]);
      }
      p += m;
    }
    if (allow_zero || !p.is_zero()) return p;
  }
}

inline RatFunc random_ratfunc(Rng& rng, const std::vector<Symbol>& vars, unsigned max_degree, int max_terms = 3) {
  MultiPoly num = random_poly(rng, vars, max_degree, max_terms);
  MultiPoly den = rng.uniform(0, 2) == 0 ? random_poly(rng, vars, max_degree, 2) : MultiPoly(1);
  return RatFunc(num, den);
}

inline UniPoly random_unipoly(Rng& rng, int max_degree, long height = 4) {
  std::vector<Rational> c;
  int d = static_cast<int>(rng.uniform(0, max_degree));
  for (int i = 0; i <= d; ++i) c.push_back(Rational(rng.uniform(-height, height)));
  return UniPoly(c);
}

inline std::vector<Symbol> symbols(const std::vector<std::string>& names) {
  std::vector<Symbol> out;
  for (const auto& n : names) out.emplace_back(n);
  return out;
}

// Laplace expansion along the first row.
template <typename T>
T cofactor_det(const Matrix<T>& m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  if (n == 1) return m[0][0];
  T total(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == T(0)) continue;
    Matrix<T> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[i][c]);
      }
      minor.push_back(row);
    }
    T term = m[0][j] * cofactor_det(minor);
    if (j % 2 == 0) total += term; else total -= term;
  }
  return total;
}

// Rank by plain Gaussian elimination over the field of rational functions.
inline std::size_t ratfunc_rank(Matrix<RatFunc> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c].is_zero()) continue;
      RatFunc f = normalize(m[r][c] / m[rank][c]);
      for (std::size_t k = c; k < cols; ++k) m[r][k] = normalize(m[r][k] - f * m[rank][k]);
    }
    ++rank;
  }
  return rank;
}

// Jacobian of the elements with respect to the generators, then ratfunc_rank.
inline std::size_t oracle_trdeg(const std::vector<FieldElement>& elems, const DiffFieldPresentation& field) {
  Matrix<RatFunc> j;
  for (const auto& e : elems) {
    std::vector<RatFunc> row;
    for (const auto& g : field.generators()) row.push_back(normalize(e.value().partial(Symbol(g))));
    j.push_back(row);
  }
  return ratfunc_rank(j);
}

// Checks target * Q(tower) = P(tower) at random rational points, with tower
// values computed pointwise. Points where a denominator vanishes are skipped.
inline bool pointwise_certificate_check(const MembershipCertificate& c, const DiffFieldPresentation& field,
                                        std::uint64_t seed, int points = 6) {
  Rng rng(seed);
  int checked = 0;
  for (int attempt = 0; attempt < 10 * points && checked < points; ++attempt) {
    std::map<Symbol, Rational> pt;
    for (const auto& g : field.generators()) {
      Rational v(rng.uniform(-1000, 1000), 1UL + rng.next() % 7);
      v.canonicalize();
      pt[Symbol(g)] = v;
    }
    try {
      std::map<Symbol, Rational> tower_pt;
      for (std::size_t i = 0; i < c.tower.size(); ++i) tower_pt[tower_symbol(i)] = c.tower[i].value().evaluate(pt);
      Rational t = c.target.value().evaluate(pt);
      Rational q = c.denominator.evaluate(tower_pt);
      Rational p = c.numerator.evaluate(tower_pt);
      if (t * q != p) return false;
      ++checked;
    } catch (const std::exception&) {
    }
  }
  return checked == points;
}

// Differential fields used by the random corpora.
struct NamedField {
  std::string name;
  DiffFieldPresentation field;
};

inline DiffFieldPresentation make_field(const std::vector<std::string>& gens,
                                        const std::map<std::string, RatFunc>& derivation) {
  return DiffFieldPresentation(gens, derivation);
}

inline RatFunc var(const std::string& name) { return RatFunc::variable(Symbol(name)); }

// x' = 1, y' = 0.
inline DiffFieldPresentation example_field() { return make_field({"x", "y"}, {{"x", 1}, {"y", 0}}); }

// t' = 1.
inline DiffFieldPresentation line_field() { return make_field({"t"}, {{"t", 1}}); }

// Presentation on the first m of x, y, w (m <= 3) with random derivations whose
// numerator and denominator have degree <= max_degree.
inline DiffFieldPresentation random_field(Rng& rng, int m, unsigned max_degree, bool allow_denominators) {
  const std::vector<std::string> names = {"x", "y", "w"};
  std::vector<std::string> gens(names.begin(), names.begin() + m);
  auto vars = symbols(gens);
  std::map<std::string, RatFunc> derivation;
  for (const auto& g : gens) {
    MultiPoly num = random_poly(rng, vars, max_degree, 2, 3, true);
    MultiPoly den = allow_denominators && rng.uniform(0, 2) == 0 ? random_poly(rng, vars, max_degree, 2, 3)
                                                                  : MultiPoly(1);
    derivation.emplace(g, RatFunc(num, den));
  }
  return DiffFieldPresentation(gens, derivation);
}

inline FieldElement random_element(Rng& rng, const DiffFieldPresentation& field, unsigned max_degree,
                                   bool allow_denominators) {
  std::vector<std::string> gens = field.generators();
  auto vars = symbols(gens);
  MultiPoly num = random_poly(rng, vars, max_degree, 3, 4);
  MultiPoly den = allow_denominators && rng.uniform(0, 3) == 0 ? random_poly(rng, vars, 1, 2, 3) : MultiPoly(1);
  return FieldElement(RatFunc(num, den));
}

inline FieldElement random_nonconstant(Rng& rng, const DiffFieldPresentation& field, unsigned max_degree,
                                       bool allow_denominators) {
  for (;;) {
    FieldElement e = random_element(rng, field, max_degree, allow_denominators);
    if (is_nonconstant(e, field)) return e;
  }
}

// A field with at least one nonconstant generator.
inline DiffFieldPresentation random_live_field(Rng& rng, int m, unsigned max_degree, bool allow_denominators) {
  for (;;) {
    DiffFieldPresentation f = random_field(rng, m, max_degree, allow_denominators);
    for (const auto& g : f.generators()) {
      if (!f.derivative_of(g).is_zero()) return f;
    }
  }
}

// Random polynomial in Lambda_0..Lambda_max_order (and optionally x, x').
inline DiffPoly random_lambda_poly(Rng& rng, unsigned max_order, unsigned max_degree, bool with_x = false) {
  std::vector<Symbol> vars;
  for (unsigned i = 0; i <= max_order; ++i) vars.emplace_back("Lambda", i);
  if (with_x) {
    vars.emplace_back("x", 0);
    vars.emplace_back("x", 1);
  }
  return DiffPoly(random_poly(rng, vars, max_degree, 4, 4));
}

// W_{k,l} assembled by hand: derivative rows, column l dropped, Laplace.
inline DiffPoly oracle_wkl(int k, int l) {
  DiffPoly x = DiffPoly::indeterminate("x"), y = DiffPoly::indeterminate("y");
  std::vector<DiffPoly> sources;
  for (int j = 1; j <= k + 1; ++j) {
    if (j != l) sources.push_back(x.pow(static_cast<unsigned>(j)) - y.pow(static_cast<unsigned>(j)));
  }
  Matrix<MultiPoly> m;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    std::vector<MultiPoly> row;
    for (const auto& src : sources) row.push_back(formal_derive(src, static_cast<unsigned>(i)).body());
    m.push_back(row);
  }
  return DiffPoly(cofactor_det(m));
}

}  // namespace testing
