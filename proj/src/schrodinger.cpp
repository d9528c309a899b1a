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

#include "qlocal/schrodinger.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <string>

#include "qlocal/errors.hpp"

namespace qlocal {

void validate_density(const DensityMatrix& rho, double tol, double psd_tol) {
  const Matrix& m = rho.matrix;
  if (m.rows() != m.cols() || m.rows() != rho.subset.dim()) {
    throw IntegrityError("density matrix dimension does not match its subset");
  }
  if (!is_hermitian(m, tol)) {
    throw IntegrityError("density matrix is not Hermitian");
  }
  if (std::abs(m.trace() - Complex(1.0)) > tol) {
    throw IntegrityError("density matrix trace differs from 1");
  }
  // Smallest eigenvalue >= -psd_tol iff m + psd_tol*I admits a Cholesky
  // factorization (Sylvester's criterion without an eigensolver).
  const Matrix shifted =
      m + psd_tol * Matrix::Identity(m.rows(), m.cols());
  Eigen::LLT<Matrix> llt(shifted);
  if (llt.info() != Eigen::Success) {
    throw IntegrityError("density matrix is not positive semidefinite");
  }
}

void apply_gate_to_state(Vector& state, const Matrix& g,
                         const std::vector<int>& targets, int n) {
  const std::int64_t dim = std::int64_t{1} << n;
  if (state.size() != dim) {
    throw ArgumentError("apply_gate_to_state: state dimension mismatch");
  }
  const int k = static_cast<int>(targets.size());
  const std::int64_t gdim = std::int64_t{1} << k;
  if (g.rows() != gdim || g.cols() != gdim) {
    throw ArgumentError("apply_gate_to_state: gate dimension mismatch");
  }
  std::int64_t target_mask = 0;
  for (int t : targets) {
    if (t < 1 || t > n) {
      throw ArgumentError("apply_gate_to_state: target out of range");
    }
    target_mask |= std::int64_t{1} << bit_position(t, n);
  }

  Vector next(dim);
  for (std::int64_t r = 0; r < dim; ++r) {
    const std::int64_t gr = gather_bits(r, targets, n);
    const std::int64_t rest = r & ~target_mask;
    Complex acc = 0.0;
    for (std::int64_t gc = 0; gc < gdim; ++gc) {
      acc += g(gr, gc) * state(rest | scatter_bits(gc, targets, n));
    }
    next(r) = acc;
  }
  state = std::move(next);
}

Vector run_state(const Circuit& c) {
  validate_circuit(c);
  const std::int64_t dim = std::int64_t{1} << c.n;
  if (dim > kDimCap) {
    throw ResourceError("run_state: 2^" + std::to_string(c.n) +
                        " exceeds the dimension cap");
  }
  Vector state = Vector::Zero(dim);
  state(0) = 1.0;
  for (const auto& op : c.ops) {
    apply_gate_to_state(state, gate_matrix(op), op.targets, c.n);
  }
  return state;
}

DensityMatrix reduced_density(const Vector& s, const QubitSubset& subset) {
  const int n = subset.n();
  if (s.size() != (std::int64_t{1} << n)) {
    throw ArgumentError("reduced_density: state dimension mismatch");
  }
  const Matrix projector = s * s.adjoint();
  return DensityMatrix{subset, partial_trace(projector, subset.complement())};
}

double expectation_observable(const Vector& s, const Matrix& o, double tol) {
  if (o.rows() != s.size() || o.cols() != s.size()) {
    throw ArgumentError("expectation_observable: dimension mismatch");
  }
  if (!is_hermitian(o, tol)) {
    throw ArgumentError("expectation_observable: observable is not Hermitian");
  }
  const Complex value = s.dot(o * s);
  if (std::abs(value.imag()) >= 1e-10) {
    throw IntegrityError(
        "expectation_observable: expectation has a non-real part");
  }
  return value.real();
}

}  // namespace qlocal
