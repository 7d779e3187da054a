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

#ifndef DIFFPRIM_SRC_MULTIMODULAR_HPP_
#define DIFFPRIM_SRC_MULTIMODULAR_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "diffprim/linalg.hpp"
#include "diffprim/rational.hpp"

namespace diffprim {

// Kernel vector of a rational matrix whose kernel is one-dimensional with the
// last column free. The kernel is computed mod a run of 62-bit primes,
// combined by CRT and lifted by rational reconstruction; the vector is
// normalized to last entry 1. Correctness rests on accept(), which is called
// on every stable reconstruction. nullopt if the kernel shape is wrong mod
// several primes or no accepted candidate appears within max_primes.
std::optional<std::vector<Rational>> kernel_vector_multimodular(
    const Matrix<Rational>& a, const std::function<bool(const std::vector<Rational>&)>& accept,
    std::size_t max_primes = 96);

// a/b with |a|, b <= sqrt(m / 2) and a = b u mod m, if one exists.
std::optional<Rational> rational_reconstruction(const Integer& u, const Integer& m);

}  // namespace diffprim

#endif  // DIFFPRIM_SRC_MULTIMODULAR_HPP_
