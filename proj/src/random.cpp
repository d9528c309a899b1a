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

#include "qlocal/random.hpp"

#include <cmath>
#include <numbers>

#include "qlocal/errors.hpp"

namespace qlocal {

double Rng::uniform() {
  // 53 random bits -> double in [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::int64_t Rng::below(std::int64_t bound) {
  if (bound <= 0) throw ArgumentError("Rng::below: bound must be positive");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t b = static_cast<std::uint64_t>(bound);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return static_cast<std::int64_t>(v % b);
}

double Rng::gaussian() {
  double u1;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_gaussian() {
  const double a = gaussian();
  const double b = gaussian();
  return Complex(a, b);
}

Matrix random_unitary(std::int64_t dim, Rng& rng) {
  Matrix g(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      g(i, j) = rng.complex_gaussian();
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Rephasing by the sign of diag(R) makes the distribution Haar.
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0) ? d / a : Complex(1.0, 0.0);
  }
  return q;
}

QubitSubset random_subset(int n, Rng& rng) {
  if (n < 2) {
    throw ArgumentError("random_subset: need n >= 2 for a proper subset");
  }
  std::vector<int> members;
  do {
    members.clear();
    for (int k = 1; k <= n; ++k) {
      if (rng.uniform() < 0.5) members.push_back(k);
    }
  } while (members.empty() || static_cast<int>(members.size()) == n);
  return QubitSubset(n, std::move(members));
}

std::pair<QubitSubset, QubitSubset> random_disjoint_subsets(int n, Rng& rng) {
  if (n < 2) {
    throw ArgumentError("random_disjoint_subsets: need n >= 2");
  }
  std::vector<int> a, b;
  do {
    a.clear();
    b.clear();
    for (int k = 1; k <= n; ++k) {
      switch (rng.below(3)) {
        case 0: a.push_back(k); break;
        case 1: b.push_back(k); break;
        default: break;
      }
    }
  } while (a.empty() || b.empty());
  return {QubitSubset(n, std::move(a)), QubitSubset(n, std::move(b))};
}

}  // namespace qlocal
