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

#include <vector>

#include "qlocal/linalg.hpp"
#include "qlocal/schrodinger.hpp"
#include "qlocal/subset.hpp"

namespace qlocal {

/// Local description of subsystem A as the grid of conjugated basis
/// operators: cell(i, j) = u' (|j><i| on A, identity elsewhere) u, with the
/// dagger on the left. Grid indices follow the global basis ordering of A's
/// qubits (lowest qubit index = most significant bit).
class EvolutionMatrix {
 public:
  EvolutionMatrix(QubitSubset subset, std::vector<Matrix> grid);

  const QubitSubset& subset() const { return subset_; }
  int n() const { return subset_.n(); }
  /// Grid side length d_A = 2^|A|.
  std::int64_t dim() const { return subset_.dim(); }

  const Matrix& cell(std::int64_t i, std::int64_t j) const;
  Matrix& cell(std::int64_t i, std::int64_t j);

 private:
  QubitSubset subset_;
  std::vector<Matrix> grid_;  // row-major, dim() x dim()
};

/// Throws IntegrityError unless the Hermitian pairing, resolution of
/// identity and product relations hold.
void validate_evolution_matrix(const EvolutionMatrix& em,
                               double pair_tol = 1e-12,
                               double product_tol = kDefaultTol);

/// cell(i, j) = u' (|j><i| on a) u for a full-dimension unitary u.
EvolutionMatrix build_evolution_matrix(const Matrix& u, const QubitSubset& a,
                                       double tol = kDefaultTol);

/// Local evolution by a unitary v on A: grid'[i][j] = sum_mn v_im cell(m,n)
/// conj(v_jn).
EvolutionMatrix evolve_local(const Matrix& v, const EvolutionMatrix& em);

/// Removes subsystem B from AB: grid'[i][j] = sum_k cell((i,k), (j,k)),
/// composite indices interleaved per the global basis ordering.
EvolutionMatrix trace_out(const EvolutionMatrix& em, const QubitSubset& b);

/// Composes disjoint subsystems: cell'((i,k), (j,l)) = ema(i,j) * emb(k,l),
/// composite indices interleaved per the global basis ordering. Both
/// operands must describe the same global evolution; this is the caller's
/// contract and is not checkable from local data alone.
EvolutionMatrix join(const EvolutionMatrix& ema, const EvolutionMatrix& emb);

/// The morphism to phenomenal states: rho_ij = tr(cell(i,j) |0..0><0..0|).
DensityMatrix morphism_phi(const EvolutionMatrix& em);

}  // namespace qlocal
