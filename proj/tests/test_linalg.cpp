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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "qlocal/errors.hpp"
#include "qlocal/linalg.hpp"
#include "qlocal/random.hpp"
#include "test_util.hpp"

using namespace qlocal;
using testutil::random_square;

namespace {

// Independent elementwise Kronecker oracle: (a (x) b)[i*rb+k][j*cb+l] = a_ij b_kl.
Matrix kron_bruteforce(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace

TEST_CASE("kron of identities and Paulis") {
  CHECK(approx_equal(kron(identity2(), identity2()), identity(4), 0.0));

  // sigma_x (x) I swaps the two 2-blocks.
  const Matrix xi = kron(pauli_x(), identity2());
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 2) = expected(1, 3) = expected(2, 0) = expected(3, 1) = 1.0;
  CHECK(approx_equal(xi, expected, 0.0));

  const Matrix zz = kron(pauli_z(), pauli_z());
  Vector diag(4);
  diag << 1, -1, -1, 1;
  CHECK(approx_equal(zz, Matrix(diag.asDiagonal()), 0.0));
  CHECK(approx_equal(zz, kron_bruteforce(pauli_z(), pauli_z()), 0.0));
}

TEST_CASE("kron matches the elementwise definition on random inputs") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = testutil::random_matrix(3, 2, rng);
    const Matrix b = testutil::random_matrix(2, 4, rng);
    CHECK(approx_equal(kron(a, b), kron_bruteforce(a, b), 0.0));
  }
}

TEST_CASE("kron is associative exactly") {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = random_square(2, rng);
    const Matrix b = random_square(2, rng);
    const Matrix c = random_square(2, rng);
    CHECK(max_deviation(kron(kron(a, b), c), kron(a, kron(b, c))) == 0.0);
  }
}

TEST_CASE("kron mixed-product identity") {
  Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = random_square(2, rng);
    const Matrix b = random_square(4, rng);
    const Matrix c = random_square(2, rng);
    const Matrix d = random_square(4, rng);
    CHECK(max_deviation(kron(a, b) * kron(c, d), kron(a * c, b * d)) <= 1e-12);
  }
}

TEST_CASE("kron rejects dimensions beyond the cap") {
  const Matrix big = Matrix::Identity(1 << 10, 1 << 10);
  CHECK_THROWS_AS(kron(kron(big, identity(32)), identity(32)), ResourceError);
}

TEST_CASE("embed_gate places single-qubit gates") {
  CHECK(approx_equal(embed_gate(pauli_x(), {2}, 2),
                     kron(identity2(), pauli_x()), 0.0));
  CHECK(approx_equal(embed_gate(pauli_x(), {1}, 2),
                     kron(pauli_x(), identity2()), 0.0));
}

TEST_CASE("embed_gate with reversed targets conjugates by SWAP") {
  Matrix cnot = Matrix::Zero(4, 4);
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  Matrix swap = Matrix::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;

  CHECK(approx_equal(embed_gate(cnot, {1, 2}, 2), cnot, 0.0));

  const Matrix reversed = embed_gate(cnot, {2, 1}, 2);
  const Matrix oracle = swap * cnot * swap;
  // Brute-force check on all four basis vectors.
  for (int b = 0; b < 4; ++b) {
    Vector e = Vector::Zero(4);
    e(b) = 1.0;
    CHECK(max_norm(Matrix(reversed * e - oracle * e)) == 0.0);
  }
  CHECK(approx_equal(reversed, oracle, 0.0));
}

TEST_CASE("embed_gate argument checks") {
  CHECK_THROWS_AS(embed_gate(pauli_x(), {1, 2}, 2), ArgumentError);
  CHECK_THROWS_AS(embed_gate(pauli_x(), {3}, 2), ArgumentError);
  CHECK_THROWS_AS(embed_gate(identity(4), {1, 1}, 2), ArgumentError);
}

TEST_CASE("embedded gates on disjoint qubits commute") {
  Rng rng(14);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix g = random_unitary(2, rng);
    const Matrix h = random_unitary(2, rng);
    const Matrix gi = embed_gate(g, {1}, 3);
    const Matrix hj = embed_gate(h, {3}, 3);
    CHECK(max_deviation(gi * hj, hj * gi) <= 1e-14);
  }
}

TEST_CASE("partial_trace of a product state factors") {
  Rng rng(15);
  const Matrix rho = random_square(2, rng);
  const Matrix sigma = random_square(2, rng);
  const Matrix both = kron(rho, sigma);
  const Matrix traced = partial_trace(both, QubitSubset(2, {2}));
  CHECK(approx_equal(traced, Matrix(rho * sigma.trace()), 1e-13));
}

TEST_CASE("partial_trace of a Bell projector is maximally mixed") {
  Vector bell(4);
  bell << 1.0 / std::numbers::sqrt2, 0, 0, 1.0 / std::numbers::sqrt2;
  const Matrix proj = bell * bell.adjoint();
  const Matrix reduced = partial_trace(proj, QubitSubset(2, {2}));
  CHECK(approx_equal(reduced, 0.5 * identity(2), 1e-15));
}

TEST_CASE("partial_trace of identity counts the traced dimension") {
  CHECK(approx_equal(partial_trace(identity(4), QubitSubset(2, {1})),
                     2.0 * identity(2), 0.0));
}

TEST_CASE("partial_trace preserves the trace") {
  Rng rng(16);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix m = random_square(8, rng);
    const Matrix t = partial_trace(m, QubitSubset(3, {2}));
    CHECK(std::abs(t.trace() - m.trace()) <= 1e-12);
  }
}

TEST_CASE("partial_trace is the adjoint of embedding") {
  // tr(tr_B(m) x) = tr(m (x embedded on A)) for operators x on A.
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix m = random_square(8, rng);
    const Matrix x = random_square(2, rng);
    const QubitSubset traced(3, {1, 3});
    const QubitSubset kept = traced.complement();
    const Complex lhs = (partial_trace(m, traced) * x).trace();
    const Complex rhs = (m * embed_on_subset(x, kept)).trace();
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }
}

TEST_CASE("numerical_rank basics") {
  CHECK(numerical_rank(RealMatrix::Zero(3, 3), 1e-9) == 0);
  CHECK(numerical_rank(RealMatrix::Identity(5, 5), 1e-9) == 5);

  RealMatrix nearly(2, 2);
  nearly << 1, 1, 1, 1 + 1e-12;
  CHECK(numerical_rank(nearly, 1e-9) == 1);
  CHECK(numerical_rank(nearly, 1e-14) == 2);
}

TEST_CASE("numerical_rank of a known low-rank stack") {
  // Three copies of one row plus one independent row.
  RealMatrix m(4, 3);
  m << 1, 2, 3, 2, 4, 6, -1, -2, -3, 0, 0, 1;
  CHECK(numerical_rank(m, 1e-9) == 2);
}

TEST_CASE("is_unitary") {
  Matrix h(2, 2);
  const double s = 1.0 / std::numbers::sqrt2;
  h << s, s, s, -s;
  CHECK(is_unitary(h, 1e-12));
  CHECK_FALSE(is_unitary(Matrix(2.0 * identity(2)), 1e-12));

  // Product of known unitary factors stays unitary.
  Rng rng(18);
  Matrix u = identity(4);
  u = u * kron(pauli_x(), pauli_z());
  for (int i = 0; i < 4; ++i) {
    const double theta = rng.uniform(0, 6.28);
    Matrix rz(2, 2);
    rz << std::exp(Complex(0, -theta / 2)), 0, 0, std::exp(Complex(0, theta / 2));
    u = u * embed_gate(rz, {1 + static_cast<int>(i % 2)}, 2);
  }
  CHECK(is_unitary(u, 1e-10));
}

TEST_CASE("QubitSubset operations") {
  const QubitSubset a(4, {2, 4});
  CHECK(a.complement() == QubitSubset(4, {1, 3}));
  CHECK(a.disjoint_from(QubitSubset(4, {1, 3})));
  CHECK_FALSE(a.disjoint_from(QubitSubset(4, {4})));
  CHECK(a.disjoint_union(QubitSubset(4, {3})) == QubitSubset(4, {2, 3, 4}));
  CHECK(a.minus(QubitSubset(4, {4})) == QubitSubset(4, {2}));
  CHECK_THROWS_AS(QubitSubset(2, {1, 1}), ArgumentError);
  CHECK_THROWS_AS(QubitSubset(2, {3}), ArgumentError);
  CHECK(QubitSubset::whole(3).dim() == 8);
  CHECK(QubitSubset::empty(3).dim() == 1);
}

TEST_CASE("gather and scatter bits round-trip") {
  const std::vector<int> qubits = {3, 1};
  for (std::int64_t v = 0; v < 4; ++v) {
    CHECK(gather_bits(scatter_bits(v, qubits, 4), qubits, 4) == v);
  }
  // Qubit 1 is the most significant global bit: n=2, index of |10> is 2.
  CHECK(scatter_bits(1, {1}, 2) == 2);
  CHECK(scatter_bits(1, {2}, 2) == 1);
}
