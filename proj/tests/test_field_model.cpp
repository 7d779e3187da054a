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

#include <functional>

#include "diffprim/error.hpp"
#include "diffprim/field.hpp"
#include "diffprim/ritt.hpp"
#include "support.hpp"

using namespace diffprim;
using testing::var;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

const RankOptions kSymbolic{RankMethod::Symbolic};

}  // namespace

TEST_CASE("presentation validation") {
  CHECK(kind_of([] { DiffFieldPresentation({"x", "y"}, {{"x", RatFunc(1)}}); }) == ErrorKind::MissingDerivation);
  CHECK(kind_of([] { DiffFieldPresentation({"x", "x"}, {{"x", RatFunc(1)}}); }) == ErrorKind::DuplicateGenerator);
  CHECK(kind_of([] { DiffFieldPresentation({"x"}, {{"x", var("q")}}); }) == ErrorKind::UnknownVariable);
  auto f = testing::example_field();
  CHECK(kind_of([&] { f.check_element(FieldElement(var("q"))); }) == ErrorKind::UnknownVariable);
  CHECK(f.dimension() == 2);
  CHECK(f.is_generator("y"));
  CHECK_FALSE(f.is_generator("q"));
}

TEST_CASE("element derivation") {
  auto f = testing::example_field();
  FieldElement x = f.generator("x"), y = f.generator("y");
  CHECK(derive_element(x * x + y, f) == FieldElement(2) * x);
  CHECK(derive_element(y, f).is_zero());
  auto line = testing::make_field({"x"}, {{"x", 1}});
  FieldElement t = line.generator("x");
  CHECK(derive_element(FieldElement(1) / t, line) == FieldElement(-1) / (t * t));
  CHECK(derive_element(t.pow(3), line, 2) == FieldElement(6) * t);

  auto pro = prolongation(x * x + y, f, 2);
  REQUIRE(pro.size() == 3);
  CHECK(pro[0] == x * x + y);
  CHECK(pro[1] == FieldElement(2) * x);
  CHECK(pro[2] == FieldElement(2));
  auto flat = prolongation(y, f, 2);
  CHECK(flat[1].is_zero());
  CHECK(flat[2].is_zero());
  CHECK(prolongation(x, f, 0).size() == 1);
}

TEST_CASE("Leibniz rule on elements") {
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    auto field = testing::random_field(rng, 2, 2, true);
    FieldElement f = testing::random_element(rng, field, 2, true);
    FieldElement g = testing::random_element(rng, field, 2, true);
    CHECK(derive_element(f * g, field) == derive_element(f, field) * g + f * derive_element(g, field));
    CHECK(derive_element(f + g, field) == derive_element(f, field) + derive_element(g, field));
  }
}

TEST_CASE("nonconstant detection") {
  auto f = testing::example_field();
  CHECK(is_nonconstant(f.generator("x"), f));
  CHECK_FALSE(is_nonconstant(f.generator("y"), f));
  CHECK_FALSE(is_nonconstant(f.generator("x") - f.generator("x"), f));
}

TEST_CASE("algebraic transcendence degree") {
  auto f = testing::example_field();
  FieldElement x = f.generator("x"), y = f.generator("y");
  for (const auto& opt : {RankOptions{}, kSymbolic}) {
    CHECK(alg_trdeg({x, y}, f, opt) == 2);
    CHECK(alg_trdeg({x, x * x}, f, opt) == 1);
    CHECK(alg_trdeg({x * x + y, FieldElement(2) * x, FieldElement(2)}, f, opt) == 2);
    CHECK(alg_trdeg({FieldElement(5)}, f, opt) == 0);
  }
  CHECK(testing::oracle_trdeg({x * x + y, FieldElement(2) * x, FieldElement(2)}, f) == 2);
}

TEST_CASE("randomized rank agrees with the oracle") {
  Rng rng(32);
  for (int i = 0; i < 25; ++i) {
    int m = static_cast<int>(rng.uniform(1, 2));
    auto field = testing::random_field(rng, m, 2, false);
    std::vector<FieldElement> elems;
    int count = static_cast<int>(rng.uniform(1, 3));
    for (int j = 0; j < count; ++j) elems.push_back(testing::random_element(rng, field, 3, true));
    if (rng.uniform(0, 1)) elems.push_back(elems[0] * elems[0] + FieldElement(3));
    RankOptions opt;
    opt.seed = static_cast<std::uint64_t>(i);
    std::size_t expected = testing::oracle_trdeg(elems, field);
    CHECK(alg_trdeg(elems, field, opt) == expected);
    CHECK(alg_trdeg(elems, field, kSymbolic) == expected);
  }
}

TEST_CASE("randomized rank is reproducible") {
  auto f = testing::example_field();
  FieldElement x = f.generator("x"), y = f.generator("y");
  RankOptions opt;
  opt.seed = 99;
  auto a = jacobian_rank({x * y, x / (y + FieldElement(1))}, f, opt);
  auto b = jacobian_rank({x * y, x / (y + FieldElement(1))}, f, opt);
  CHECK(a.rank == b.rank);
  CHECK(a.witness_points == b.witness_points);
}

TEST_CASE("differential transcendence degree") {
  auto f = testing::example_field();
  FieldElement x = f.generator("x"), y = f.generator("y");
  auto r = diff_trdeg({x * x + y}, f, kSymbolic);
  CHECK(r.trdeg == 2);
  CHECK(r.stabilization_order == 1);
  CHECK(diff_trdeg({y + FieldElement(3) * x}, f, kSymbolic).trdeg == 1);
  CHECK(diff_trdeg({FieldElement(5)}, f).trdeg == 0);
  CHECK(diff_trdeg({x, y}, f).trdeg == 2);
  auto constant = diff_trdeg({y}, f);
  CHECK(constant.trdeg == 1);
  CHECK(constant.stabilization_order == 0);
  for (Rational lambda : {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(1, 2)}) {
    CHECK(diff_trdeg({y + FieldElement(lambda) * x}, f, kSymbolic).trdeg == 1);
  }
}

TEST_CASE("stabilization is sound") {
  Rng rng(33);
  for (int i = 0; i < 15; ++i) {
    auto field = testing::random_live_field(rng, static_cast<int>(rng.uniform(1, 2)), 2, true);
    FieldElement a = testing::random_element(rng, field, 2, false);
    auto r = diff_trdeg({a}, field);
    auto longer = prolongation(a, field, r.stabilization_order + 3);
    CHECK(testing::oracle_trdeg(longer, field) == r.trdeg);
  }
}

TEST_CASE("membership certificates") {
  auto f = testing::example_field();
  FieldElement x = f.generator("x"), y = f.generator("y");
  std::vector<FieldElement> tower = {x * x + y, FieldElement(2) * x};

  auto cx = member_of_tower(x, tower, f, 8);
  REQUIRE(cx.has_value());
  CHECK(cx->revalidate());
  CHECK(cx->degree_bound == 1);
  // x = z'/2
  CHECK(RatFunc(cx->numerator, cx->denominator) == RatFunc(Rational(1, 2)) * RatFunc::variable(tower_symbol(1)));
  CHECK(testing::pointwise_certificate_check(*cx, f, 1));

  auto cy = member_of_tower(y, tower, f, 8);
  REQUIRE(cy.has_value());
  CHECK(cy->revalidate());
  CHECK(cy->degree_bound == 2);
  RatFunc z0 = RatFunc::variable(tower_symbol(0)), z1 = RatFunc::variable(tower_symbol(1));
  RatFunc half = RatFunc(Rational(1, 2));
  CHECK(RatFunc(cy->numerator, cy->denominator) == z0 - half * z1 * half * z1);
  CHECK(testing::pointwise_certificate_check(*cy, f, 2));

  CHECK_FALSE(member_of_tower(x, {y}, f, 8).has_value());
  CHECK_FALSE(member_of_tower(y, {x * x}, f, 8).has_value());
  // x is algebraic of degree 2 over Q(x^2): no rational expression exists.
  auto still = testing::make_field({"x"}, {{"x", 0}});
  FieldElement s = still.generator("x");
  CHECK_FALSE(member_of_tower(s, {s * s}, still, 8).has_value());
  CHECK_FALSE(member_of_tower(s.pow(3), {s}, still, 2).has_value());
  auto cube = member_of_tower(s.pow(3), {s}, still, 3);
  REQUIRE(cube.has_value());
  CHECK(cube->degree_bound == 3);
  CHECK(kind_of([&] { member_of_tower(x, {}, f, 8); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("coefficient lists follow the canonical order") {
  MultiPoly p = MultiPoly::variable(tower_symbol(0)) * MultiPoly::variable(tower_symbol(1)) + MultiPoly(3);
  auto list = coefficient_list(p, 2);
  REQUIRE(list.size() == 2);
  CHECK(list[0].first == std::vector<unsigned>{1, 1});
  CHECK(list[0].second == 1);
  CHECK(list[1].first == std::vector<unsigned>{0, 0});
  CHECK(list[1].second == 3);
}

TEST_CASE("the next derivative lies in the order-n tower") {
  Rng rng(34);
  for (int i = 0; i < 8; ++i) {
    auto field = testing::random_live_field(rng, static_cast<int>(rng.uniform(1, 2)), 2, true);
    FieldElement a = testing::random_nonconstant(rng, field, 2, true);
    std::size_t n = diff_trdeg({a}, field).trdeg;
    auto tower = prolongation(a, field, static_cast<unsigned>(n));
    auto cert = member_of_tower(derive_element(tower.back(), field), tower, field, 8);
    REQUIRE(cert.has_value());
    CHECK(cert->revalidate());
    CHECK(testing::pointwise_certificate_check(*cert, field, static_cast<std::uint64_t>(i)));
  }
}

TEST_CASE("candidate enumeration order") {
  CandidateEnumerator e(2, 2);
  std::vector<std::string> first;
  for (int i = 0; i < 8; ++i) first.push_back(to_string(e.next().value()));
  CHECK(first == std::vector<std::string>{"t", "t + 1", "t - 1", "-t", "-t + 1", "-t - 1", "t + 2", "t - 2"});
  CHECK(e.produced() == 8);
  CHECK(candidate_value(0) == 0);
  CHECK(candidate_value(1) == 1);
  CHECK(candidate_value(2) == -1);
  CHECK(candidate_value(3) == 2);

  CandidateEnumerator all(1, 1);
  std::size_t count = 0;
  bool saw_half = false;
  while (auto p = all.next()) {
    ++count;
    if (to_string(*p) == "1/2*t") saw_half = true;
  }
  CHECK(saw_half);
  CHECK(count == all.produced());
}

TEST_CASE("Ritt witnesses") {
  auto line = testing::make_field({"t"}, {{"t", 1}});
  FieldElement t = line.generator("t");
  SearchConfig cfg;
  CHECK(to_string(ritt_witness(DiffPoly::indeterminate("x", 1), t, line, cfg)) == "t");
  CHECK(to_string(ritt_witness(DiffPoly::indeterminate("x", 2), t, line, cfg)) == "t^2");
  CHECK(to_string(ritt_witness(DiffPoly::indeterminate("x"), t, line, cfg)) == "t");
  // q(x) = x'' - 2 vanishes on p = t^2 but not on later candidates.
  DiffPoly q = DiffPoly::indeterminate("x", 2) - DiffPoly(2);
  UniPoly p = ritt_witness(q, t, line, cfg);
  CHECK(!diff_substitute(q, {{"x", p.evaluate(t.value())}}, line).is_zero());

  CHECK(kind_of([&] { ritt_witness(DiffPoly(), t, line, cfg); }) == ErrorKind::ZeroPolynomial);
  auto f = testing::example_field();
  CHECK(kind_of([&] { ritt_witness(DiffPoly::indeterminate("x", 1), f.generator("y"), f, cfg); }) ==
        ErrorKind::ConstantElement);
  CHECK(kind_of([&] {
          ritt_witness(DiffPoly::indeterminate("x") * DiffPoly::indeterminate("w"), t, line, cfg);
        }) == ErrorKind::InvalidArgument);
  SearchConfig tight;
  tight.max_p_degree = 1;
  CHECK(kind_of([&] { ritt_witness(DiffPoly::indeterminate("x", 2), t, line, tight); }) == ErrorKind::CapExceeded);
}
