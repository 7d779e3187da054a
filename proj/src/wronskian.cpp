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

#include "diffprim/wronskian.hpp"

#include "diffprim/error.hpp"

namespace diffprim {

WronskianMatrix wronskian_matrix(const std::vector<DiffPoly>& sources) {
  if (sources.empty()) throw Error(ErrorKind::InvalidArgument, "Wronskian of an empty list");
  WronskianMatrix w{{}, sources};
  std::vector<DiffPoly> row = sources;
  for (std::size_t i = 0; i < sources.size(); ++i) {
    if (i > 0) {
      for (auto& e : row) e = formal_derive(e);
    }
    w.entries.push_back(row);
  }
  return w;
}

DiffPoly wronskian(const std::vector<DiffPoly>& sources) {
  auto w = wronskian_matrix(sources);
  Matrix<MultiPoly> m;
  for (const auto& row : w.entries) {
    std::vector<MultiPoly> r;
    for (const auto& e : row) r.push_back(e.body());
    m.push_back(std::move(r));
  }
  return DiffPoly(bareiss_determinant(std::move(m)));
}

FieldElement wronskian(const std::vector<FieldElement>& sources, const DiffFieldPresentation& field) {
  if (sources.empty()) throw Error(ErrorKind::InvalidArgument, "Wronskian of an empty list");
  const std::size_t n = sources.size();
  std::vector<FieldElement> row = sources;
  Matrix<MultiPoly> m;
  MultiPoly scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      for (auto& e : row) e = derive_element(e, field);
    }
    // Clear the row's denominators.
    MultiPoly common(1);
    for (const auto& e : row) {
      const MultiPoly& d = e.value().den();
      if (!d.is_constant() && !exact_divide(common, d)) common *= d;
    }
    std::vector<MultiPoly> r;
    for (const auto& e : row) r.push_back(*exact_divide(e.value().num() * common, e.value().den()));
    m.push_back(std::move(r));
    scale *= common;
  }
  return FieldElement(RatFunc(bareiss_determinant(std::move(m)), scale));
}

DiffPoly build_wkl(int k, int l) {
  if (k < 2 || l < 1 || l > k + 1) {
    throw Error(ErrorKind::ArgumentOutOfRange,
                "W_{k,l} needs k >= 2 and 1 <= l <= k+1, got k=" + std::to_string(k) + ", l=" + std::to_string(l));
  }
  const DiffPoly x = DiffPoly::indeterminate("x");
  const DiffPoly y = DiffPoly::indeterminate("y");
  std::vector<DiffPoly> sources;
  for (int j = 1; j <= k + 1; ++j) {
    if (j == l) continue;
    sources.push_back(x.pow(static_cast<unsigned>(j)) - y.pow(static_cast<unsigned>(j)));
  }
  return wronskian(sources);
}

bool WklDecomposition::reassembles() const {
  const auto top = static_cast<unsigned>(k - 1);
  DiffPoly sum = A + DiffPoly::indeterminate("x", top) * B + DiffPoly::indeterminate("y", top) * C;
  return sum == W;
}

namespace {

bool orders_at_most(const DiffPoly& p, int max_order) {
  for (const auto& s : p.body().symbols()) {
    if (static_cast<int>(s.order) > max_order) return false;
  }
  return true;
}

}  // namespace

WklDecomposition decompose_wkl(int k, int l) {
  WklDecomposition out;
  out.k = k;
  out.l = l;
  out.W = build_wkl(k, l);
  const Symbol X("x", static_cast<unsigned>(k - 1));
  const Symbol Y("y", static_cast<unsigned>(k - 1));
  MultiPoly a, b, c;
  for (const auto& [m, coeff] : out.W.body().terms()) {
    const unsigned ex = m.exponent(X);
    const unsigned ey = m.exponent(Y);
    if (ex + ey > 1) {
      throw Error(ErrorKind::DecompositionFailed,
                  "W_{" + std::to_string(k) + "," + std::to_string(l) + "} is not affine in the top-order symbols");
    }
    if (ex == 1) {
      b.add_term(m.with_exponent(X, 0), coeff);
    } else if (ey == 1) {
      c.add_term(m.with_exponent(Y, 0), coeff);
    } else {
      a.add_term(m, coeff);
    }
  }
  out.A = DiffPoly(std::move(a));
  out.B = DiffPoly(std::move(b));
  out.C = DiffPoly(std::move(c));
  const std::string tag = "W_{" + std::to_string(k) + "," + std::to_string(l) + "}";
  if (!orders_at_most(out.A, k - 2) || !orders_at_most(out.B, k - 2) || !orders_at_most(out.C, k - 2)) {
    throw Error(ErrorKind::DecompositionFailed, tag + ": A, B, C exceed derivative order k-2");
  }
  if (k >= 3) {
    const MultiPoly x1 = MultiPoly::variable(Symbol("x", 1));
    const MultiPoly y1 = MultiPoly::variable(Symbol("y", 1));
    auto d = exact_divide(out.C.body(), x1);
    if (!d || !(out.B.body() == -(y1 * *d))) {
      throw Error(ErrorKind::DecompositionFailed, tag + ": B = -y' D and C = x' D do not hold");
    }
    out.D = DiffPoly(std::move(*d));
    if (!orders_at_most(*out.D, k - 2)) throw Error(ErrorKind::DecompositionFailed, tag + ": D exceeds order k-2");
  }
  return out;
}

int corollary_witness(const std::vector<WklDecomposition>& decompositions) {
  if (decompositions.empty()) throw Error(ErrorKind::InvalidArgument, "no decompositions");
  const int k = decompositions.front().k;
  if (k < 3) throw Error(ErrorKind::ArgumentOutOfRange, "the corollary witness needs k >= 3");
  if (static_cast<int>(decompositions.size()) != k + 1) {
    throw Error(ErrorKind::InvalidArgument, "expected decompositions for l = 1..k+1");
  }
  const WklDecomposition& last = decompositions.back();
  for (int l = 1; l <= k; ++l) {
    const WklDecomposition& dl = decompositions[static_cast<std::size_t>(l - 1)];
    DiffPoly e = dl.A * *last.D - last.A * *dl.D;
    if (!e.is_zero()) return l;
  }
  throw Error(ErrorKind::NoWitness, "no l in [1, k] with A_l D_{k+1} - A_{k+1} D_l != 0 for k=" + std::to_string(k));
}

int corollary_witness(int k) {
  if (k < 3) throw Error(ErrorKind::ArgumentOutOfRange, "the corollary witness needs k >= 3");
  std::vector<WklDecomposition> ds;
  for (int l = 1; l <= k + 1; ++l) ds.push_back(decompose_wkl(k, l));
  return corollary_witness(ds);
}

DiffPoly k2_determinant_check() {
  const WklDecomposition w23 = decompose_wkl(2, 3);
  const WklDecomposition w22 = decompose_wkl(2, 2);
  if (!w23.A.is_zero() || !w22.A.is_zero()) {
    throw Error(ErrorKind::DecompositionFailed, "W_{2,2}, W_{2,3} are not linear forms in x', y'");
  }
  // Rows (W_{2,3}, W_{2,2}), columns (x', y').
  return w23.B * w22.C - w23.C * w22.B;
}

std::vector<LemmaCheck> verify_lemmas(int k_max) {
  if (k_max < 2) throw Error(ErrorKind::ArgumentOutOfRange, "verify-lemmas needs k_max >= 2");
  std::vector<LemmaCheck> rows;
  auto record = [&](std::string lemma, std::string instance, auto&& check) {
    LemmaCheck row{std::move(lemma), std::move(instance), false, {}};
    try {
      row.passed = check(row.detail);
    } catch (const Error& e) {
      row.passed = false;
      row.detail = std::string(error_kind_name(e.kind())) + ": " + e.what();
    }
    rows.push_back(std::move(row));
  };

  const DiffPoly x = DiffPoly::indeterminate("x");
  const DiffPoly y = DiffPoly::indeterminate("y");
  const DiffPoly x1 = DiffPoly::indeterminate("x", 1);
  const DiffPoly y1 = DiffPoly::indeterminate("y", 1);
  const DiffPoly diff = x - y;

  record("explicit W_{2,3}", "W_{2,3} = (x - y)^2 (x' + y')", [&](std::string& detail) {
    DiffPoly w = build_wkl(2, 3);
    detail = to_string(w);
    return w == diff.pow(2) * (x1 + y1);
  });
  record("explicit W_{2,2}", "W_{2,2} = (x - y)(x'(2x^2 - xy - y^2) + y'(x^2 + xy - 2y^2))", [&](std::string& detail) {
    DiffPoly w = build_wkl(2, 2);
    detail = to_string(w);
    DiffPoly expected = diff * (x1 * (DiffPoly(2) * x * x - x * y - y * y) + y1 * (x * x + x * y - DiffPoly(2) * y * y));
    return w == expected;
  });
  record("k = 2 coefficient determinant", "det = -(x - y)^5", [&](std::string& detail) {
    DiffPoly det = k2_determinant_check();
    detail = to_string(det);
    return det == -diff.pow(5);
  });

  for (int k = 2; k <= k_max; ++k) {
    std::vector<WklDecomposition> decompositions;
    bool all_decomposed = true;
    for (int l = 1; l <= k + 1; ++l) {
      const std::string inst = "k=" + std::to_string(k) + ", l=" + std::to_string(l);
      record("W_{k,l}(x, x) = 0", inst, [&](std::string& detail) {
        DiffPoly w = build_wkl(k, l);
        std::map<Symbol, RatFunc> onto;
        for (const auto& s : w.body().symbols()) {
          if (s.base == "y") onto.emplace(s, RatFunc::variable(Symbol("x", s.order)));
        }
        RatFunc v = substitute(w.body(), onto);
        detail = v.is_zero() ? "0" : to_string(v);
        return v.is_zero();
      });
      record("structure A + x^(k-1) B + y^(k-1) C", inst, [&](std::string& detail) {
        WklDecomposition d = decompose_wkl(k, l);
        bool ok = d.reassembles();
        if (k >= 3) {
          detail = "D = " + to_string(*d.D);
          ok = ok && d.B == -(y1 * *d.D) && d.C == x1 * *d.D;
        } else {
          detail = "B = " + to_string(d.B) + ", C = " + to_string(d.C);
        }
        decompositions.push_back(std::move(d));
        return ok;
      });
      if (static_cast<int>(decompositions.size()) != l) all_decomposed = false;
    }
    if (k >= 3) {
      record("corollary A_l D_{k+1} - A_{k+1} D_l != 0", "k=" + std::to_string(k), [&](std::string& detail) {
        if (!all_decomposed) {
          detail = "decomposition failed";
          return false;
        }
        int l = corollary_witness(decompositions);
        detail = "l = " + std::to_string(l);
        return true;
      });
    }
  }
  return rows;
}

}  // namespace diffprim
