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

#include "diffprim/ritt.hpp"

#include <numeric>
#include <set>

#include "diffprim/error.hpp"

namespace diffprim {

long candidate_value(int index) {
  long magnitude = (index + 1) / 2;
  return index % 2 == 1 ? magnitude : -magnitude;
}

CandidateEnumerator::CandidateEnumerator(int max_degree, int max_height)
    : max_degree_(max_degree), max_height_(max_height) {
  if (max_degree_ < 1 || max_height_ < 1) done_ = true;
}

bool CandidateEnumerator::valid() const {
  if (digits_[0] == 0) return false;
  bool reaches_height = false;
  long g = 0;
  for (int d : digits_) {
    long v = candidate_value(d);
    if (std::labs(v) == height_) reaches_height = true;
    g = std::gcd(g, std::labs(v));
  }
  if (!reaches_height) return false;
  return denominator_ == 1 || std::gcd(g, static_cast<long>(denominator_)) == 1;
}

bool CandidateEnumerator::start_block() {
  digits_.assign(static_cast<std::size_t>(degree_) + 1, 0);
  digits_[0] = 1;
  return true;
}

bool CandidateEnumerator::advance() {
  const int top = 2 * height_;
  for (int pos = static_cast<int>(digits_.size()) - 1; pos >= 0; --pos) {
    if (digits_[pos] < top) {
      ++digits_[pos];
      return true;
    }
    digits_[pos] = pos == 0 ? 1 : 0;
  }
  // Block exhausted: next height, next degree, next denominator.
  if (++height_ > max_height_) {
    height_ = 1;
    if (++degree_ > max_degree_) {
      degree_ = 1;
      if (denominator_ == 1) {
        denominator_ = 2;
      } else if (++denominator_ > 4) {
        return false;
      }
    }
  }
  start_block();
  return true;
}

std::optional<UniPoly> CandidateEnumerator::next() {
  if (done_) return std::nullopt;
  if (fresh_block_) {
    fresh_block_ = false;
    start_block();
  } else if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  while (!valid()) {
    if (!advance()) {
      done_ = true;
      return std::nullopt;
    }
  }
  std::vector<Rational> coeffs(digits_.size());
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    // digits_[0] is the leading coefficient c_d.
    Rational c(candidate_value(digits_[i]), denominator_);
    c.canonicalize();
    coeffs[digits_.size() - 1 - i] = c;
  }
  ++produced_;
  return UniPoly(std::move(coeffs));
}

UniPoly ritt_witness(const DiffPoly& q, const FieldElement& f, const DiffFieldPresentation& field,
                     const SearchConfig& cfg) {
  cfg.validate();
  if (q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "ritt_witness: the differential polynomial is zero");
  std::set<std::string> bases;
  for (const auto& s : q.body().symbols()) bases.insert(s.base);
  if (bases.size() > 1) {
    throw Error(ErrorKind::InvalidArgument, "ritt_witness: expected a differential polynomial in one indeterminate");
  }
  if (!is_nonconstant(f, field)) throw Error(ErrorKind::ConstantElement, "ritt_witness: the element is constant");
  // A nonzero constant q is nonzero at every point.
  const std::string base = bases.empty() ? "x" : *bases.begin();
  CandidateEnumerator candidates(cfg.max_p_degree, cfg.max_coeff_height);
  while (auto p = candidates.next()) {
    FieldElement at = FieldElement(p->evaluate(f.value()));
    if (!diff_substitute(q, {{base, at}}, field).is_zero()) return *p;
  }
  throw Error(ErrorKind::CapExceeded,
              "ritt_witness: no witness with degree <= " + std::to_string(cfg.max_p_degree) +
                  " and coefficient height <= " + std::to_string(cfg.max_coeff_height));
}

}  // namespace diffprim
