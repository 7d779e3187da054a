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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffprim/ratfunc.hpp"

namespace diffprim {

// An element of a presented differential field: a rational function in the
// generators. Arithmetic results are normalized to control expression size.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(RatFunc value) : value_(normalize(value)) {}
  FieldElement(const Rational& c) : value_(c) {}
  FieldElement(long c) : value_(c) {}
  FieldElement(int c) : value_(c) {}

  const RatFunc& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) { return FieldElement(a.value_ + b.value_); }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return FieldElement(a.value_ - b.value_); }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) { return FieldElement(a.value_ * b.value_); }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return FieldElement(a.value_ / b.value_); }
  FieldElement operator-() const { return FieldElement(-value_); }
  FieldElement pow(unsigned e) const { return FieldElement(value_.pow(e)); }

  bool operator==(const FieldElement& rhs) const { return value_ == rhs.value_; }

 private:
  RatFunc value_;
};

std::string to_string(const FieldElement& f);

// k(t_1, ..., t_m) with the derivation given on the generators, extended to
// the whole field by the chain rule. Constants k = Q.
class DiffFieldPresentation {
 public:
  // Throws Error(MissingDerivation) for a generator without a derivation,
  // Error(DuplicateGenerator) for repeats and Error(UnknownVariable) when a
  // derivation mentions a symbol that is not a generator.
  DiffFieldPresentation(std::vector<std::string> generators, std::map<std::string, RatFunc> derivation);

  const std::vector<std::string>& generators() const { return generators_; }
  std::size_t dimension() const { return generators_.size(); }
  const RatFunc& derivative_of(const std::string& generator) const;
  bool is_generator(const std::string& name) const;
  FieldElement generator(const std::string& name) const;

  // Throws Error(UnknownVariable) if the element mentions a non-generator.
  void check_element(const FieldElement& f) const;

 private:
  std::vector<std::string> generators_;
  std::map<std::string, RatFunc> derivation_;
};

// f' = sum_i (df/dt_i) t_i', iterated.
FieldElement derive_element(const FieldElement& f, const DiffFieldPresentation& field, unsigned times = 1);

// [f, f', ..., f^(N)]
std::vector<FieldElement> prolongation(const FieldElement& f, const DiffFieldPresentation& field, unsigned up_to);

bool is_nonconstant(const FieldElement& f, const DiffFieldPresentation& field);

enum class RankMethod { Randomized, Symbolic };

struct RankOptions {
  RankMethod method = RankMethod::Randomized;
  std::uint64_t seed = 0;
  int retries = 32;
  long bound = 1000000;
};

using Point = std::map<Symbol, Rational>;

struct RankResult {
  std::size_t rank = 0;
  std::vector<Point> witness_points;
};

// Transcendence degree over Q of the field generated by the elements: the
// rank of the Jacobian (df_i/dt_j) over the function field (char 0).
// Randomized mode evaluates at integer points in [-bound, bound]^m and throws
// Error(RandomizationExhausted) if no pole-free point turns up.
RankResult jacobian_rank(const std::vector<FieldElement>& elements, const DiffFieldPresentation& field,
                         const RankOptions& options = {});
std::size_t alg_trdeg(const std::vector<FieldElement>& elements, const DiffFieldPresentation& field,
                      const RankOptions& options = {});

struct TrdegReport {
  std::size_t trdeg = 0;
  unsigned stabilization_order = 0;
  RankMethod method = RankMethod::Randomized;
  std::vector<Point> witness_points;
};

// Differential transcendence degree of k<gens>: r_N = alg_trdeg of all
// prolongations up to order N, stopping at the first N with r_{N+1} = r_N.
TrdegReport diff_trdeg(const std::vector<FieldElement>& gens, const DiffFieldPresentation& field,
                       const RankOptions& options = {});

// Witness that target = P(tower) / Q(tower). P and Q are polynomials in the
// tower symbols z, z', z'', ... where the i-th symbol stands for tower[i].
struct MembershipCertificate {
  FieldElement target;
  std::vector<FieldElement> tower;
  MultiPoly numerator;
  MultiPoly denominator;
  int degree_bound = 0;

  // Rechecks target * Q(tower) - P(tower) = 0 and Q(tower) != 0 exactly.
  bool revalidate() const;
};

Symbol tower_symbol(std::size_t index);

// Coefficient list of a certificate polynomial: exponent vector over the
// tower symbols and coefficient, in descending grlex order.
std::vector<std::pair<std::vector<unsigned>, Rational>> coefficient_list(const MultiPoly& p, std::size_t tower_size);

// Searches P, Q of total degree <= d for d = 0..degree_cap by solving the
// homogeneous linear system obtained from target * Q(tower) - P(tower) = 0
// after clearing denominators and matching monomials in the generators.
// nullopt means unwitnessed within the cap, not refuted.
std::optional<MembershipCertificate> member_of_tower(const FieldElement& target,
                                                     const std::vector<FieldElement>& tower,
                                                     const DiffFieldPresentation& field, int degree_cap);

}  // namespace diffprim
