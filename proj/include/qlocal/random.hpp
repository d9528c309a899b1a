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

#include <cstdint>
#include <random>

#include "qlocal/linalg.hpp"
#include "qlocal/subset.hpp"

namespace qlocal {

/// Seeded generator with hand-rolled distributions so that sweeps are
/// reproducible across standard-library implementations (std distributions
/// are not pinned by the standard; mt19937_64 is).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [0, bound).
  std::int64_t below(std::int64_t bound);
  /// Standard normal via Box-Muller.
  double gaussian();
  /// Standard complex normal (real and imaginary parts N(0, 1)).
  Complex complex_gaussian();

 private:
  std::mt19937_64 engine_;
};

/// Haar-distributed random unitary of the given dimension (Ginibre + QR with
/// the R diagonal rephased).
Matrix random_unitary(std::int64_t dim, Rng& rng);

/// Random nonempty proper subset of an n-qubit network.
QubitSubset random_subset(int n, Rng& rng);

/// Two disjoint nonempty subsets of an n-qubit network (n >= 2).
std::pair<QubitSubset, QubitSubset> random_disjoint_subsets(int n, Rng& rng);

}  // namespace qlocal
