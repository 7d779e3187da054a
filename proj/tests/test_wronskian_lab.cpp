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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diffprim/error.hpp"
#include "diffprim/wronskian.hpp"
#include "support.hpp"

using namespace diffprim;

namespace {

DiffPoly x(unsigned k = 0) { return DiffPoly::indeterminate("x", k); }
DiffPoly y(unsigned k = 0) { return DiffPoly::indeterminate("y", k); }

// Replaces every y^(i) by x^(i).
DiffPoly collapse(const DiffPoly& q) {
  std::map<Symbol, RatFunc> bind;
  for (const auto& s : q.body().symbols()) {
    if (s.base == "y") bind.emplace(s, RatFunc::variable(Symbol("x", s.order)));
  }
  RatFunc r = substitute(q.body(), bind);
  return DiffPoly(r.num() * (1 / r.den().constant_term()));
}

int max_order(const DiffPoly& q) { return std::max(q.order_of("x"), q.order_of("y")); }

bool out_of_range(int k, int l) {
  try {
    build_wkl(k, l);
  } catch (const Error& e) {
    return e.kind() == ErrorKind::ArgumentOutOfRange;
  }
  return false;
}

}  // namespace

TEST_CASE("small Wronskians") {
  auto line = testing::line_field();
  FieldElement t = line.generator("t");
  CHECK(wronskian({t, t * t}, line) == t * t);
  CHECK(wronskian({t}, line) == t);
  CHECK(wronskian({t, FieldElement(2) * t}, line).is_zero());
  CHECK(wronskian({x(), y()}) == x() * y(1) - x(1) * y());
  auto m = wronskian_matrix({x(), x().pow(2)});
  CHECK(m.entries[1][1] == DiffPoly(2) * x() * x(1));
}

TEST_CASE("Wronskian of powers has the closed form") {
  auto line = testing::line_field();
  FieldElement t = line.generator("t");
  Rational superfactorial = 1, factorial = 1;
  std::vector<FieldElement> powers;
  for (unsigned k = 1; k <= 5; ++k) {
    powers.push_back(t.pow(k));
    // prod_{i<j} (j - i) t^{sum j - k(k-1)/2} = (0! 1! ... (k-1)!) t^k
    if (k > 1) {
      factorial *= k - 1;
      superfactorial *= factorial;
    }
    FieldElement w = wronskian(powers, line);
    CHECK_FALSE(w.is_zero());
    CHECK(w == FieldElement(superfactorial) * t.pow(k));
  }
}

TEST_CASE("Wronskian agrees with cofactor expansion") {
  Rng rng(41);
  auto vars = std::vector<Symbol>{Symbol("x"), Symbol("y")};
  for (int i = 0; i < 10; ++i) {
    std::vector<DiffPoly> sources;
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
    for (std::size_t j = 0; j < n; ++j) sources.push_back(DiffPoly(testing::random_poly(rng, vars, 2, 2, 3)));
    auto m = wronskian_matrix(sources);
    Matrix<MultiPoly> bodies;
    for (const auto& row : m.entries) {
      std::vector<MultiPoly> b;
      for (const auto& e : row) b.push_back(e.body());
      bodies.push_back(b);
    }
    CHECK(wronskian(sources).body() == testing::cofactor_det(bodies));
  }
}

TEST_CASE("multilinearity under constant scaling") {
  Rng rng(42);
  auto vars = std::vector<Symbol>{Symbol("x"), Symbol("y")};
  for (int i = 0; i < 25; ++i) {
    std::vector<DiffPoly> sources, scaled;
    Rational product = 1;
    std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    for (std::size_t j = 0; j < n; ++j) {
      DiffPoly s(testing::random_poly(rng, vars, 2, 2, 3));
      Rational c = testing::small_rational(rng, 6);
      sources.push_back(s);
      scaled.push_back(DiffPoly(c) * s);
      product *= c;
    }
    CHECK(wronskian(scaled) == DiffPoly(product) * wronskian(sources));
  }
}

TEST_CASE("explicit k = 2 formulas") {
  DiffPoly d = x() - y();
  CHECK(build_wkl(2, 3) == d.pow(2) * (x(1) + y(1)));
  CHECK(build_wkl(2, 2) ==
        d * (x(1) * (DiffPoly(2) * x().pow(2) - x() * y() - y().pow(2)) +
             y(1) * (x().pow(2) + x() * y() - DiffPoly(2) * y().pow(2))));
  DiffPoly det = k2_determinant_check();
  CHECK(det == -(d.pow(5)));
  CHECK(det.body().evaluate({{Symbol("x"), 2}, {Symbol("y"), 1}}) == -1);
  std::map<Symbol, RatFunc> swap{{Symbol("x"), RatFunc::variable(Symbol("y"))},
                                 {Symbol("y"), RatFunc::variable(Symbol("x"))}};
  CHECK(substitute(det.body(), swap) == RatFunc(-det.body()));
}

TEST_CASE("W_{k,l} against an independent determinant") {
  for (int k = 2; k <= 4; ++k) {
    for (int l = 1; l <= k + 1; ++l) {
      CAPTURE(k);
      CAPTURE(l);
      DiffPoly w = build_wkl(k, l);
      CHECK(w == testing::oracle_wkl(k, l));
      CHECK(max_order(w) <= k - 1);
      CHECK(collapse(w).is_zero());
    }
  }
  CHECK(out_of_range(1, 1));
  CHECK(out_of_range(3, 0));
  CHECK(out_of_range(3, 5));
}

TEST_CASE("structure of W_{k,l}") {
  for (int k = 2; k <= 4; ++k) {
    for (int l = 1; l <= k + 1; ++l) {
      CAPTURE(k);
      CAPTURE(l);
      WklDecomposition d = decompose_wkl(k, l);
      CHECK(d.reassembles());
      const unsigned top = static_cast<unsigned>(k - 1);
      CHECK(d.W == d.A + x(top) * d.B + y(top) * d.C);
      CHECK(max_order(d.A) <= k - 2);
      CHECK(max_order(d.B) <= k - 2);
      CHECK(max_order(d.C) <= k - 2);
      if (k >= 3) {
        REQUIRE(d.D.has_value());
        CHECK(d.B == -(y(1) * *d.D));
        CHECK(d.C == x(1) * *d.D);
        CHECK(max_order(*d.D) <= k - 2);
      } else {
        CHECK_FALSE(d.D.has_value());
      }
    }
  }
}

TEST_CASE("corollary witnesses") {
  CHECK(corollary_witness(3) == 1);
  CHECK(corollary_witness(4) == 1);
  for (int k = 3; k <= 4; ++k) {
    int l = corollary_witness(k);
    auto dl = decompose_wkl(k, l);
    auto dk = decompose_wkl(k, k + 1);
    CHECK_FALSE((dl.A * *dk.D - dk.A * *dl.D).is_zero());
  }
  try {
    corollary_witness(2);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ArgumentOutOfRange);
  }
}

TEST_CASE("lemma table") {
  auto rows = verify_lemmas(4);
  // 3 explicit rows, 2 per (k, l) pair, one corollary row per k >= 3.
  CHECK(rows.size() == 3 + 2 * (3 + 4 + 5) + 2);
  for (const auto& r : rows) {
    CAPTURE(r.instance);
    CHECK(r.passed);
  }
}
