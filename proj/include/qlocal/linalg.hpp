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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "qlocal/subset.hpp"

namespace qlocal {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

/// Default max-norm comparison tolerance. All identities implemented here are
/// exact; tolerances are floating-point allowances only.
inline constexpr double kDefaultTol = 1e-10;

/// Largest matrix dimension any operation will allocate (2^14 covers well
/// beyond the n <= 8 target scale).
inline constexpr std::int64_t kDimCap = std::int64_t{1} << 14;

// Pauli matrices and friends.
const Matrix& pauli_x();
const Matrix& pauli_y();
const Matrix& pauli_z();
const Matrix& identity2();
Matrix identity(std::int64_t dim);

/// |ket><bra| on a dim-dimensional space.
Matrix ket_bra(std::int64_t dim, std::int64_t ket, std::int64_t bra);

/// max_ij |a_ij|.
double max_norm(const Matrix& a);
/// max_ij |a_ij - b_ij|; dimensions must agree.
double max_deviation(const Matrix& a, const Matrix& b);
bool approx_equal(const Matrix& a, const Matrix& b, double tol = kDefaultTol);

bool is_unitary(const Matrix& m, double tol = kDefaultTol);
bool is_hermitian(const Matrix& m, double tol = kDefaultTol);

/// Kronecker product; block (i,j) of the result equals a_ij * b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Embeds a 2^k x 2^k gate into the 2^n space of the whole network, acting on
/// the listed qubits in listed order (first listed qubit = most significant
/// bit of the gate's own index) and as identity elsewhere. Qubit 1 is the most
/// significant bit of the global computational basis |b_1 b_2 ... b_n>.
Matrix embed_gate(const Matrix& g, const std::vector<int>& targets, int n);

/// Embeds an operator living on a sorted subset of qubits.
Matrix embed_on_subset(const Matrix& g, const QubitSubset& subset);

/// Partial trace over the listed qubits; the result acts on the remaining
/// qubits in increasing order.
Matrix partial_trace(const Matrix& m, const QubitSubset& traced);

/// Rank by row reduction with full pivoting (largest absolute pivot in the
/// remaining submatrix); a pivot counts iff |pivot| > tol. Deterministic.
int numerical_rank(RealMatrix m, double tol);

/// Basis index helpers for the |b_1 b_2 ... b_n> convention: qubit k occupies
/// bit (n - k) counted from the least significant end.
inline int bit_position(int qubit, int n) { return n - qubit; }

/// Gathers the bits of `index` at the given qubits (in listed order, first
/// listed = most significant) into a small index.
std::int64_t gather_bits(std::int64_t index, const std::vector<int>& qubits, int n);

/// Scatters the bits of `small` (same ordering) onto the given qubits; all
/// other bits are zero.
std::int64_t scatter_bits(std::int64_t small, const std::vector<int>& qubits, int n);

}  // namespace qlocal
