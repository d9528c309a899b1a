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
#include <optional>
#include <utility>
#include <vector>

#include "qlocal/circuit.hpp"
#include "qlocal/descriptor.hpp"
#include "qlocal/evolution.hpp"
#include "qlocal/linalg.hpp"

namespace qlocal {

/// Change of operator basis from a qubit descriptor to its evolution matrix:
///   cell(0,0) = (I + qz)/2        cell(0,1) = (qx - i qy)/2
///   cell(1,0) = (qx + i qy)/2     cell(1,1) = (I - qz)/2
EvolutionMatrix descriptor_to_evolution(const Descriptor& d);

/// Inverse change of basis (single-qubit subsystems only):
///   qx = cell(0,1) + cell(1,0),  qz = cell(0,0) - cell(1,1).
Descriptor evolution_to_descriptor(const EvolutionMatrix& em);

/// Outcome of deciding whether two global evolutions are locally
/// indistinguishable on a subsystem.
struct EquivalenceVerdict {
  bool equivalent = false;
  /// Unitary on the complement with (W embedded) * u ~ u2; present iff
  /// equivalent. A 1x1 witness (subset = whole system) is a global phase.
  std::optional<Matrix> witness;
  double max_deviation = 0.0;
  /// Grid cell where the two evolution matrices differ most; present iff
  /// not equivalent.
  std::optional<std::pair<std::int64_t, std::int64_t>> distinguishing_cell;
};

/// Decides equivalence on subsystem a by comparing the two evolution
/// matrices cell by cell in max-norm.
EquivalenceVerdict noumenally_equivalent(const Matrix& u, const Matrix& u2,
                                         const QubitSubset& a,
                                         double tol = 1e-9);

/// Closed-form witness recovery: W = tr_A(u2 u') / 2^|A| (dagger on u),
/// returned iff the product form reproduces u2 u' within tol and W is
/// unitary within tol.
std::optional<Matrix> extract_local_witness(const Matrix& u, const Matrix& u2,
                                            const QubitSubset& a,
                                            double tol = 1e-9);

/// |tr(a' b)| / dim, equal to 1 iff b = e^{i theta} a.
double phase_invariant_fidelity(const Matrix& a, const Matrix& b);

/// Recovers the global unitary, up to a global phase, from one evolution
/// matrix per qubit. The reference entry (the largest |u_ik|^2, read off the
/// diagonal cells) is rephased to be real positive. The result is verified
/// against the inputs; inconsistent grids raise IntegrityError.
Matrix reconstruct_unitary(const std::vector<EvolutionMatrix>& ems,
                           double tol = 1e-8);

/// Expectation of a Pauli observable on U V |0...0>, where U is
/// reconstructed from the per-qubit evolution matrices and V is given as a
/// preparation circuit. The global-phase freedom of the reconstruction
/// cancels in the quadratic form.
double alternate_initial_expectation(const std::vector<EvolutionMatrix>& ems,
                                     const Circuit& prep,
                                     const PauliString& obs);

/// Closed-form dimension counts of the local-description state spaces.
struct DimensionReport {
  int n = 0;
  std::int64_t descriptor_dim = 0;    // 3/4 * 2^(2n), single-qubit description
  std::int64_t universal_dim = 0;     // 2^(2n) - 1, whole-network description
  std::int64_t wavefunction_dim = 0;  // 2^(n+1) - 2
  std::int64_t density_dim = 0;       // 3, the Bloch ball
};

DimensionReport theoretical_dims(int n);

/// Empirical dimension of the single-qubit description manifold: rank of the
/// finite-difference Jacobian of U -> vec(evolution matrix of qubit k) at
/// U = I along all 4^n anti-Hermitian directions. Central differences with
/// step h; rank tolerance rank_tol scaled by the Jacobian max-norm when the
/// latter exceeds 1.
int empirical_descriptor_dim(int n, int k, double h = 1e-5,
                             double rank_tol = 1e-6);

}  // namespace qlocal
