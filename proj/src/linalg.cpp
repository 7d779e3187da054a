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

#include "diffprim/linalg.hpp"

#include "diffprim/error.hpp"

namespace diffprim {
namespace {

// Reduces to RREF in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix<Rational>& m, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    Rational inv = 1 / m[row][col];
    for (std::size_t j = col; j < columns; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational factor = m[i][col];
      for (std::size_t j = col; j < columns; ++j) {
        if (m[row][j] != 0) m[i][j] -= factor * m[row][j];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw Error(ErrorKind::InvalidArgument, "internal: Bareiss division was not exact");
  return *q;
}

// Eliminates in place; returns the rank and the sign of the permutation.
std::size_t bareiss(Matrix<MultiPoly>& m, int& sign) {
  sign = 1;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  MultiPoly prev(1);
  std::size_t k = 0;
  for (; k < rows && k < cols; ++k) {
    // Pivot: the nonzero entry with the fewest terms keeps expressions small.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = k; i < rows; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        if (m[i][j].is_zero()) continue;
        if (pi == rows || m[i][j].size() < m[pi][pj].size()) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == rows) break;
    if (pi != k) {
      std::swap(m[pi], m[k]);
      sign = -sign;
    }
    if (pj != k) {
      for (auto& r : m) std::swap(r[pj], r[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        MultiPoly v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? v * Rational(1 / prev.constant_term()) : exact(v, prev);
      }
      m[i][k] = MultiPoly();
    }
    prev = m[k][k];
  }
  return k;
}

}  // namespace

std::size_t rank(Matrix<Rational> m) {
  if (m.empty()) return 0;
  return rref(m, m[0].size()).size();
}

std::vector<std::vector<Rational>> null_space(Matrix<Rational> m, std::size_t columns) {
  auto pivots = rref(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t bareiss_rank(Matrix<MultiPoly> m) {
  int sign = 1;
  return bareiss(m, sign);
}

MultiPoly bareiss_determinant(Matrix<MultiPoly> m) {
  const std::size_t n = m.size();
  for (const auto& r : m) {
    if (r.size() != n) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  }
  if (n == 0) return MultiPoly(1);
  int sign = 1;
  if (bareiss(m, sign) < n) return MultiPoly();
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace diffprim
