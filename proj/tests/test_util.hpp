// Copyright 2026 The qlocal developers
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

#include "qlocal/linalg.hpp"
#include "qlocal/random.hpp"

namespace qlocal::testutil {

inline Matrix random_matrix(std::int64_t rows, std::int64_t cols, Rng& rng) {
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = rng.complex_gaussian();
    }
  }
  return m;
}

inline Matrix random_square(std::int64_t dim, Rng& rng) {
  return random_matrix(dim, dim, rng);
}

inline Matrix random_hermitian(std::int64_t dim, Rng& rng) {
  const Matrix m = random_square(dim, rng);
  return 0.5 * (m + m.adjoint().eval());
}

}  // namespace qlocal::testutil
