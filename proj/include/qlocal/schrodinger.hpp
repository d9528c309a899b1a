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

#include "qlocal/circuit.hpp"
#include "qlocal/linalg.hpp"
#include "qlocal/subset.hpp"

namespace qlocal {

/// Phenomenal state of a subsystem.
struct DensityMatrix {
  QubitSubset subset;
  Matrix matrix;
};

/// Throws IntegrityError unless the matrix is Hermitian (tol), unit-trace
/// (tol) and positive semidefinite (psd_tol on the smallest eigenvalue,
/// decided by a Cholesky factorization of matrix + psd_tol * I).
void validate_density(const DensityMatrix& rho, double tol = kDefaultTol,
                      double psd_tol = 1e-8);

/// Applies one gate directly to a state vector (no full-space matrix).
void apply_gate_to_state(Vector& state, const Matrix& g,
                         const std::vector<int>& targets, int n);

/// U|0...0> computed gate by gate; independent of global_unitary.
Vector run_state(const Circuit& c);

/// Partial trace of |s><s| over the complement of the subset.
DensityMatrix reduced_density(const Vector& s, const QubitSubset& subset);

/// <s|o|s> for a Hermitian full-dimension observable.
double expectation_observable(const Vector& s, const Matrix& o,
                              double tol = kDefaultTol);

}  // namespace qlocal
