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

#include <vector>

#include "diffprim/multipoly.hpp"
#include "diffprim/rational.hpp"

namespace diffprim {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

// Gaussian elimination over Q.
std::size_t rank(Matrix<Rational> m);

// Basis of the right null space {v : m v = 0}, one vector per free column of
// the reduced row echelon form, in increasing free-column order. The basis is
// therefore determined by the column order alone.
std::vector<std::vector<Rational>> null_space(Matrix<Rational> m, std::size_t columns);

// Fraction-free (Bareiss) elimination over Q[symbols] with complete pivoting.
std::size_t bareiss_rank(Matrix<MultiPoly> m);
MultiPoly bareiss_determinant(Matrix<MultiPoly> m);

}  // namespace diffprim
