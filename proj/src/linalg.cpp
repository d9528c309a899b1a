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

#include "qlocal/linalg.hpp"

#include <cmath>
#include <string>

#include "qlocal/errors.hpp"

namespace qlocal {

namespace {

Matrix make_pauli(Complex a00, Complex a01, Complex a10, Complex a11) {
  Matrix m(2, 2);
  m << a00, a01, a10, a11;
  return m;
}

void check_dim_cap(std::int64_t dim, const char* what) {
  if (dim > kDimCap) {
    throw ResourceError(std::string(what) + ": requested dimension " +
                        std::to_string(dim) + " exceeds cap " +
                        std::to_string(kDimCap));
  }
}

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

int log2_exact(std::int64_t v, const char* what) {
  if (!is_power_of_two(v)) {
    throw ArgumentError(std::string(what) + ": dimension " +
                        std::to_string(v) + " is not a power of two");
  }
  int k = 0;
  while ((std::int64_t{1} << k) < v) ++k;
  return k;
}

}  // namespace

const Matrix& pauli_x() {
  static const Matrix m = make_pauli(0, 1, 1, 0);
  return m;
}

const Matrix& pauli_y() {
  static const Matrix m = make_pauli(0, Complex(0, -1), Complex(0, 1), 0);
  return m;
}

const Matrix& pauli_z() {
  static const Matrix m = make_pauli(1, 0, 0, -1);
  return m;
}

const Matrix& identity2() {
  static const Matrix m = Matrix::Identity(2, 2);
  return m;
}

Matrix identity(std::int64_t dim) {
  check_dim_cap(dim, "identity");
  return Matrix::Identity(dim, dim);
}

Matrix ket_bra(std::int64_t dim, std::int64_t ket, std::int64_t bra) {
  if (ket < 0 || ket >= dim || bra < 0 || bra >= dim) {
    throw ArgumentError("ket_bra: basis index out of range");
  }
  Matrix m = Matrix::Zero(dim, dim);
  m(ket, bra) = 1.0;
  return m;
}

double max_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

double max_deviation(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ArgumentError("max_deviation: dimension mismatch");
  }
  return max_norm(a - b);
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         max_deviation(a, b) <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_norm(m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())) <=
         tol;
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_norm(m - m.adjoint().eval()) <= tol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const std::int64_t rows = a.rows() * b.rows();
  const std::int64_t cols = a.cols() * b.cols();
  check_dim_cap(std::max(rows, cols), "kron");
  Matrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

std::int64_t gather_bits(std::int64_t index, const std::vector<int>& qubits,
                         int n) {
  std::int64_t out = 0;
  for (int q : qubits) {
    out = (out << 1) | ((index >> bit_position(q, n)) & 1);
  }
  return out;
}

std::int64_t scatter_bits(std::int64_t small, const std::vector<int>& qubits,
                          int n) {
  std::int64_t out = 0;
  int k = static_cast<int>(qubits.size());
  for (int i = 0; i < k; ++i) {
    const std::int64_t bit = (small >> (k - 1 - i)) & 1;
    out |= bit << bit_position(qubits[static_cast<std::size_t>(i)], n);
  }
  return out;
}

Matrix embed_gate(const Matrix& g, const std::vector<int>& targets, int n) {
  const int k = static_cast<int>(targets.size());
  if (n < 1) throw ArgumentError("embed_gate: qubit count must be positive");
  if (g.rows() != g.cols()) {
    throw ArgumentError("embed_gate: gate matrix must be square");
  }
  if (g.rows() != (std::int64_t{1} << k)) {
    throw ArgumentError("embed_gate: gate dimension " +
                        std::to_string(g.rows()) + " does not match " +
                        std::to_string(k) + " target(s)");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int t : targets) {
    if (t < 1 || t > n) {
      throw ArgumentError("embed_gate: target " + std::to_string(t) +
                          " out of range [1, " + std::to_string(n) + "]");
    }
    if (seen[static_cast<std::size_t>(t)]) {
      throw ArgumentError("embed_gate: duplicate target " + std::to_string(t));
    }
    seen[static_cast<std::size_t>(t)] = true;
  }
  const std::int64_t dim = std::int64_t{1} << n;
  check_dim_cap(dim, "embed_gate");
  const std::int64_t gdim = g.rows();

  std::int64_t target_mask = 0;
  for (int t : targets) target_mask |= std::int64_t{1} << bit_position(t, n);
  const std::int64_t rest_mask = (dim - 1) & ~target_mask;

  Matrix out = Matrix::Zero(dim, dim);
  for (std::int64_t r = 0; r < dim; ++r) {
    const std::int64_t gr = gather_bits(r, targets, n);
    const std::int64_t rest = r & rest_mask;
    for (std::int64_t gc = 0; gc < gdim; ++gc) {
      const std::int64_t c = rest | scatter_bits(gc, targets, n);
      out(r, c) = g(gr, gc);
    }
  }
  return out;
}

Matrix embed_on_subset(const Matrix& g, const QubitSubset& subset) {
  if (subset.is_empty()) {
    // A 1x1 operator on the empty system is a scalar on the whole space.
    if (g.rows() != 1 || g.cols() != 1) {
      throw ArgumentError("embed_on_subset: empty subset takes a 1x1 operator");
    }
    return g(0, 0) * identity(std::int64_t{1} << subset.n());
  }
  return embed_gate(g, subset.members(), subset.n());
}

Matrix partial_trace(const Matrix& m, const QubitSubset& traced) {
  const int n = traced.n();
  const std::int64_t dim = std::int64_t{1} << n;
  if (m.rows() != m.cols() || m.rows() != dim) {
    throw ArgumentError("partial_trace: operator must be 2^n x 2^n for n = " +
                        std::to_string(n));
  }
  const QubitSubset kept = traced.complement();
  const std::int64_t kept_dim = kept.dim();
  const std::int64_t traced_dim = traced.dim();
  Matrix out = Matrix::Zero(kept_dim, kept_dim);
  for (std::int64_t i = 0; i < kept_dim; ++i) {
    const std::int64_t ri = scatter_bits(i, kept.members(), n);
    for (std::int64_t j = 0; j < kept_dim; ++j) {
      const std::int64_t cj = scatter_bits(j, kept.members(), n);
      Complex sum = 0.0;
      for (std::int64_t t = 0; t < traced_dim; ++t) {
        const std::int64_t tt = scatter_bits(t, traced.members(), n);
        sum += m(ri | tt, cj | tt);
      }
      out(i, j) = sum;
    }
  }
  return out;
}

int numerical_rank(RealMatrix m, double tol) {
  if (tol < 0) throw ArgumentError("numerical_rank: tolerance must be >= 0");
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  int rank = 0;
  Eigen::Index row = 0, col = 0;
  while (row < rows && col < cols) {
    // Full pivoting: largest absolute entry of the remaining submatrix.
    Eigen::Index pr = row, pc = col;
    double best = 0.0;
    for (Eigen::Index i = row; i < rows; ++i) {
      for (Eigen::Index j = col; j < cols; ++j) {
        const double v = std::abs(m(i, j));
        if (v > best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    }
    if (best <= tol) break;
    m.row(row).swap(m.row(pr));
    m.col(col).swap(m.col(pc));
    for (Eigen::Index i = row + 1; i < rows; ++i) {
      const double f = m(i, col) / m(row, col);
      m.row(i).tail(cols - col) -= f * m.row(row).tail(cols - col);
    }
    ++rank;
    ++row;
    ++col;
  }
  return rank;
}

}  // namespace qlocal
