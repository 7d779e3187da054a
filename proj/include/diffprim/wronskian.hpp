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

#include <optional>
#include <string>
#include <vector>

#include "diffprim/diffpoly.hpp"
#include "diffprim/field.hpp"
#include "diffprim/linalg.hpp"

namespace diffprim {

// Row i holds the i-th formal derivatives of the sources.
struct WronskianMatrix {
  Matrix<DiffPoly> entries;
  std::vector<DiffPoly> sources;
};

WronskianMatrix wronskian_matrix(const std::vector<DiffPoly>& sources);

// Determinants by fraction-free elimination.
DiffPoly wronskian(const std::vector<DiffPoly>& sources);
FieldElement wronskian(const std::vector<FieldElement>& sources, const DiffFieldPresentation& field);

// Wronskian of (x - y, x^2 - y^2, ..., x^{k+1} - y^{k+1}) with the column
// x^l - y^l left out. Requires k >= 2 and 1 <= l <= k + 1, otherwise throws
// Error(ArgumentOutOfRange).
DiffPoly build_wkl(int k, int l);

// W = A + x^(k-1) B + y^(k-1) C with A, B, C of order <= k - 2, and for
// k >= 3 additionally B = -y' D, C = x' D.
struct WklDecomposition {
  int k = 0;
  int l = 0;
  DiffPoly W, A, B, C;
  std::optional<DiffPoly> D;

  bool reassembles() const;
};

// Throws Error(DecompositionFailed) if W is not affine in x^(k-1), y^(k-1)
// or the k >= 3 factorization does not hold.
WklDecomposition decompose_wkl(int k, int l);

// Least l in [1, k] with A_l D_{k+1} - A_{k+1} D_l != 0. Requires k >= 3
// (Error(ArgumentOutOfRange)); Error(NoWitness) if there is none.
int corollary_witness(int k);
int corollary_witness(const std::vector<WklDecomposition>& decompositions);

// Coefficient determinant of W_{2,3}, W_{2,2} viewed as linear forms in
// (x', y'); equals -(x - y)^5.
DiffPoly k2_determinant_check();

struct LemmaCheck {
  std::string lemma;
  std::string instance;
  bool passed = false;
  std::string detail;
};

// Every Wronskian identity instance for k = 2..k_max.
std::vector<LemmaCheck> verify_lemmas(int k_max);

}  // namespace diffprim
