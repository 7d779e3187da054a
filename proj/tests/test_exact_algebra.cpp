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
#include "diffprim/linalg.hpp"
#include "diffprim/multipoly.hpp"
#include "diffprim/polygcd.hpp"
#include "diffprim/ratfunc.hpp"
#include "diffprim/unipoly.hpp"
#include "support.hpp"

using namespace diffprim;
using testing::random_poly;
using testing::random_ratfunc;

namespace {

const MultiPoly X = MultiPoly::variable("x");
const MultiPoly Y = MultiPoly::variable("y");
const MultiPoly Z = MultiPoly::variable("z");
const std::vector<Symbol> XYZ = testing::symbols({"x", "y", "z"});

bool is_error(ErrorKind kind, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(Rational(-3, 2)) == "-3/2");
  CHECK(height(Rational(-7, 3)) == 7);
  CHECK(is_error(ErrorKind::InvalidArgument, [] { parse_rational("1/0"); }));
  CHECK(is_error(ErrorKind::InvalidArgument, [] { parse_rational("x"); }));
  CHECK(is_error(ErrorKind::InvalidArgument, [] { parse_rational(""); }));
}

TEST_CASE("symbol rendering") {
  CHECK(to_string(Symbol("x")) == "x");
  CHECK(to_string(Symbol("x", 1)) == "x'");
  CHECK(to_string(Symbol("x", 3)) == "x'''");
  CHECK(to_string(Symbol("x", 4)) == "x^(4)");
  CHECK(to_string(Symbol("x", 12)) == "x^(12)");
  CHECK(is_valid_var_name("a_1"));
  CHECK_FALSE(is_valid_var_name("1a"));
  CHECK_FALSE(is_valid_var_name(""));
}

TEST_CASE("polynomial arithmetic") {
  CHECK((X - Y) * (X + Y) == X * X - Y * Y);
  CHECK(to_string(X * X + Y) == "x^2 + y");
  CHECK(to_string(Rational(1, 2) * X) == "1/2*x");
  CHECK(to_string(X - Y * Y - 3) == "-y^2 + x - 3");
  CHECK(to_string(MultiPoly()) == "0");
  CHECK((X * X * Y).partial(Symbol("x")) == Rational(2) * X * Y);
  CHECK(MultiPoly(Rational(5, 3)).partial(Symbol("x")).is_zero());
  CHECK((X + Y).pow(3) == (X + Y) * (X + Y) * (X + Y));
  CHECK((X * X + Y).evaluate({{Symbol("x"), 2}, {Symbol("y"), 3}}) == 7);
  CHECK((X * Y + X).total_degree() == 2);
  CHECK((X * X * Y).degree_in(Symbol("x")) == 2);
}

TEST_CASE("exact division") {
  auto q = exact_divide(X * X - Y * Y, X - Y);
  REQUIRE(q.has_value());
  CHECK(*q == X + Y);
  CHECK_FALSE(exact_divide(X * X + Y, X - Y).has_value());
}

TEST_CASE("ring axioms on random samples") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    MultiPoly a = random_poly(rng, XYZ, 3, 4), b = random_poly(rng, XYZ, 3, 4), c = random_poly(rng, XYZ, 3, 4);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("mixed partials commute") {
  Rng rng(12);
  for (int i = 0; i < 50; ++i) {
    RatFunc f = random_ratfunc(rng, XYZ, 3);
    Symbol v("x"), w("y");
    CHECK(f.partial(v).partial(w) == f.partial(w).partial(v));
  }
}

TEST_CASE("rational functions") {
  CHECK(RatFunc(X * X - Y * Y, X - Y) == RatFunc(X + Y));
  CHECK(normalize(RatFunc(Rational(2) * X * X + 2, MultiPoly(2))).num() == X * X + 1);
  RatFunc n = normalize(RatFunc(X * X - 1, X - 1));
  CHECK(n.den().is_constant());
  CHECK(n == RatFunc(X + 1));
  RatFunc zero = normalize(RatFunc(MultiPoly(), X));
  CHECK(zero.is_zero());
  CHECK(zero.den() == MultiPoly(1));
  CHECK(RatFunc(X, Y).partial(Symbol("y")) == RatFunc(-X, Y * Y));
  CHECK(is_error(ErrorKind::DivisionByZero, [] { RatFunc(X, MultiPoly()); }));
  CHECK(is_error(ErrorKind::PoleAtPoint, [] { RatFunc(1, X - 1).evaluate({{Symbol("x"), 1}}); }));
  CHECK(RatFunc(Rational(5, 3)).evaluate({{Symbol("x"), 9}}) == Rational(5, 3));
  CHECK(to_string(RatFunc(X * X + Y)) == "(x^2 + y)/(1)");
}

TEST_CASE("substitution") {
  RatFunc t = RatFunc::variable(Symbol("t"));
  CHECK(substitute(X * X + Y, {{Symbol("x"), t}, {Symbol("y"), RatFunc(1)}}) == t * t + RatFunc(1));
  CHECK(is_error(ErrorKind::DenominatorVanished,
                 [] { substitute(RatFunc(1, X), {{Symbol("x"), RatFunc(0)}}); }));
  CHECK(substitute(X, {}) == RatFunc(X));
  CHECK(substitute(RatFunc(X, Y), {{Symbol("y"), RatFunc(X, Z)}}) == RatFunc(Z));
}

TEST_CASE("cross-multiplication equality is an equivalence") {
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    RatFunc f = random_ratfunc(rng, XYZ, 2);
    MultiPoly s = random_poly(rng, XYZ, 2, 2);
    MultiPoly u = random_poly(rng, XYZ, 2, 2);
    RatFunc g(f.num() * s, f.den() * s);
    RatFunc h(g.num() * u, g.den() * u);
    CHECK(f == f);
    CHECK(f == g);
    CHECK(g == f);
    CHECK(g == h);
    CHECK(f == h);
    CHECK(normalize(h) == f);
  }
}

TEST_CASE("evaluation commutes with arithmetic") {
  Rng rng(14);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    RatFunc f = random_ratfunc(rng, XYZ, 3), g = random_ratfunc(rng, XYZ, 3);
    std::map<Symbol, Rational> pt;
    for (const auto& s : XYZ) pt[s] = testing::small_rational(rng, 20);
    try {
      Rational fv = f.evaluate(pt), gv = g.evaluate(pt);
      CHECK((f + g).evaluate(pt) == fv + gv);
      CHECK((f - g).evaluate(pt) == fv - gv);
      CHECK((f * g).evaluate(pt) == fv * gv);
      if (gv != 0) CHECK((f / g).evaluate(pt) == fv / gv);
      ++checked;
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PoleAtPoint);
    }
  }
  CHECK(checked > 80);
}

TEST_CASE("gcd") {
  auto g = poly_gcd(X * X - 1, X - 1, 20000);
  REQUIRE(g.has_value());
  CHECK(exact_divide(*g, X - 1).value().is_constant());

  Rng rng(15);
  for (int i = 0; i < 30; ++i) {
    MultiPoly a = random_poly(rng, XYZ, 2, 3), b = random_poly(rng, XYZ, 2, 3), c = random_poly(rng, XYZ, 2, 3);
    auto d = poly_gcd(a * c, b * c, 200000);
    REQUIRE(d.has_value());
    CHECK(exact_divide(a * c, *d).has_value());
    CHECK(exact_divide(b * c, *d).has_value());
    CHECK(exact_divide(*d, c).has_value());
  }
  // A nontrivial gcd needs more than one step.
  CHECK_FALSE(poly_gcd((X + Y + Z).pow(3) * (X - Y), (X + Y + Z).pow(2) * (X + Y), 1).has_value());
}

// x + k1 and y + k2 are coprime, so the gcd is c itself up to a constant.
TEST_CASE("gcd recovers a planted factor") {
  Rng rng(16);
  for (int i = 0; i < 60; ++i) {
    MultiPoly c = random_poly(rng, XYZ, 3, 5);
    if (c.is_constant()) continue;
    MultiPoly a = (X + MultiPoly(testing::small_rational(rng))).pow(static_cast<unsigned>(rng.uniform(1, 3)));
    MultiPoly b = Y * Z + MultiPoly(testing::small_rational(rng));
    auto d = poly_gcd(a * c, b * c.pow(2), 200000);
    REQUIRE(d.has_value());
    auto q = exact_divide(*d, c);
    REQUIRE(q.has_value());
    CHECK(q->is_constant());
  }
  // Repeated and monomial factors.
  CHECK(exact_divide(*poly_gcd(X.pow(3) * Y, X * Y.pow(4) + X.pow(2) * Y, 1000), X * Y)->is_constant());
  MultiPoly f = X * Y - Z + MultiPoly(1);
  CHECK(exact_divide(*poly_gcd(f.pow(3) * (X + Y), f.pow(2) * (X - Y), 100000), f.pow(2))->is_constant());
}

TEST_CASE("linear algebra over Q") {
  Matrix<Rational> m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  auto ns = null_space(m, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& row : m) {
    Rational s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += row[j] * ns[0][j];
    CHECK(s == 0);
  }
  CHECK(null_space(Matrix<Rational>{}, 2).size() == 2);
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
  Rng rng(16);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      Matrix<MultiPoly> m(static_cast<std::size_t>(n));
      for (auto& row : m) {
        for (int j = 0; j < n; ++j) row.push_back(random_poly(rng, XYZ, 2, 2, 3, true));
      }
      CHECK(bareiss_determinant(m) == testing::cofactor_det(m));
      MultiPoly det = testing::cofactor_det(m);
      CHECK((bareiss_rank(m) == static_cast<std::size_t>(n)) == !det.is_zero());
    }
  }
  Matrix<MultiPoly> singular{{X, Y}, {X * Z, Y * Z}};
  CHECK(bareiss_rank(singular) == 1);
  CHECK(bareiss_determinant(singular).is_zero());
}

TEST_CASE("univariate polynomials") {
  UniPoly p({1, 0, 3});  // 3t^2 + 1
  CHECK(p.degree() == 2);
  CHECK(p.derivative() == UniPoly({0, 6}));
  CHECK(p.derivative(3).is_zero());
  CHECK(p.evaluate(Rational(2)) == 13);
  CHECK(p.evaluate(RatFunc(X)) == RatFunc(Rational(3) * X * X + 1));
  CHECK(to_string(p) == "3*t^2 + 1");
  CHECK(to_string(UniPoly()) == "0");
  CHECK(UniPoly({1, 2, 0, 0}).degree() == 1);
}
