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

#include "qlocal/correspondence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qlocal/errors.hpp"
#include "qlocal/schrodinger.hpp"

namespace qlocal {

EvolutionMatrix descriptor_to_evolution(const Descriptor& d) {
  const std::int64_t dim = std::int64_t{1} << d.n;
  if (d.qx.rows() != dim || d.qz.rows() != dim) {
    throw ArgumentError("descriptor_to_evolution: dimension mismatch");
  }
  const Matrix id = identity(dim);
  const Matrix qy = descriptor_y(d);
  std::vector<Matrix> grid(4);
  grid[0] = 0.5 * (id + d.qz);                    // cell(0,0)
  grid[1] = 0.5 * (d.qx - Complex(0, 1) * qy);    // cell(0,1)
  grid[2] = 0.5 * (d.qx + Complex(0, 1) * qy);    // cell(1,0)
  grid[3] = 0.5 * (id - d.qz);                    // cell(1,1)
  return EvolutionMatrix(QubitSubset(d.n, {d.qubit}), std::move(grid));
}

Descriptor evolution_to_descriptor(const EvolutionMatrix& em) {
  if (em.subset().size() != 1) {
    throw ArgumentError(
        "evolution_to_descriptor: subsystem must be a single qubit");
  }
  const int qubit = em.subset().members().front();
  return Descriptor{qubit, em.n(), em.cell(0, 1) + em.cell(1, 0),
                    em.cell(0, 0) - em.cell(1, 1)};
}

std::optional<Matrix> extract_local_witness(const Matrix& u, const Matrix& u2,
                                            const QubitSubset& a, double tol) {
  const std::int64_t dim = std::int64_t{1} << a.n();
  if (u.rows() != dim || u.cols() != dim || u2.rows() != dim ||
      u2.cols() != dim) {
    throw ArgumentError("extract_local_witness: dimension mismatch");
  }
  const Matrix m = u2 * u.adjoint();
  // If m = (identity on A) (x) W exactly, tracing out A recovers W exactly.
  const Matrix w = partial_trace(m, a) / static_cast<double>(a.dim());
  if (!is_unitary(w, tol)) return std::nullopt;
  if (max_deviation(embed_on_subset(w, a.complement()), m) > tol) {
    return std::nullopt;
  }
  return w;
}

EquivalenceVerdict noumenally_equivalent(const Matrix& u, const Matrix& u2,
                                         const QubitSubset& a, double tol) {
  const EvolutionMatrix ema = build_evolution_matrix(u, a);
  const EvolutionMatrix emb = build_evolution_matrix(u2, a);

  EquivalenceVerdict verdict;
  std::pair<std::int64_t, std::int64_t> worst{0, 0};
  for (std::int64_t i = 0; i < ema.dim(); ++i) {
    for (std::int64_t j = 0; j < ema.dim(); ++j) {
      const double dev = max_deviation(ema.cell(i, j), emb.cell(i, j));
      if (dev > verdict.max_deviation) {
        verdict.max_deviation = dev;
        worst = {i, j};
      }
    }
  }
  verdict.equivalent = verdict.max_deviation <= tol;
  if (verdict.equivalent) {
    verdict.witness = extract_local_witness(u, u2, a, tol);
    if (!verdict.witness) {
      // Equal evolution matrices guarantee a product witness; failing to
      // recover one means the inputs were not unitary to begin with.
      throw IntegrityError(
          "noumenally_equivalent: matrices agree locally but no product "
          "witness was found");
    }
  } else {
    verdict.distinguishing_cell = worst;
  }
  return verdict;
}

double phase_invariant_fidelity(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw ArgumentError("phase_invariant_fidelity: dimension mismatch");
  }
  return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

namespace {

/// cell_q(i, i) chain applied to e_k: (prod_q cell_q(i_q, i_q)) e_k. For
/// consistent inputs the product is the rank-one projector onto column I of
/// the daggered unitary.
Vector diagonal_chain_apply(const std::vector<EvolutionMatrix>& ems,
                            std::int64_t index, std::int64_t k) {
  const int n = ems.front().n();
  const std::int64_t dim = std::int64_t{1} << n;
  Vector v = Vector::Zero(dim);
  v(k) = 1.0;
  for (int q = n; q >= 1; --q) {
    const std::int64_t bit = (index >> (n - q)) & 1;
    v = ems[static_cast<std::size_t>(q - 1)].cell(bit, bit) * v;
  }
  return v;
}

}  // namespace

Matrix reconstruct_unitary(const std::vector<EvolutionMatrix>& ems,
                           double tol) {
  if (ems.empty()) {
    throw ArgumentError("reconstruct_unitary: no evolution matrices");
  }
  const int n = ems.front().n();
  std::vector<const EvolutionMatrix*> by_qubit(static_cast<std::size_t>(n),
                                               nullptr);
  for (const auto& em : ems) {
    if (em.n() != n) {
      throw ArgumentError("reconstruct_unitary: network size mismatch");
    }
    if (em.subset().size() != 1) {
      throw ArgumentError(
          "reconstruct_unitary: inputs must be single-qubit descriptions");
    }
    const int q = em.subset().members().front();
    if (by_qubit[static_cast<std::size_t>(q - 1)] != nullptr) {
      throw ArgumentError("reconstruct_unitary: duplicate qubit " +
                          std::to_string(q));
    }
    by_qubit[static_cast<std::size_t>(q - 1)] = &em;
  }
  for (int q = 1; q <= n; ++q) {
    if (by_qubit[static_cast<std::size_t>(q - 1)] == nullptr) {
      throw ArgumentError("reconstruct_unitary: missing qubit " +
                          std::to_string(q));
    }
  }
  std::vector<EvolutionMatrix> ordered;
  ordered.reserve(static_cast<std::size_t>(n));
  for (int q = 1; q <= n; ++q) {
    ordered.push_back(*by_qubit[static_cast<std::size_t>(q - 1)]);
  }

  const std::int64_t dim = std::int64_t{1} << n;
  // The joined whole-system description has cell(I, J) = prod_q
  // cell_q(I_q, J_q), whose (l, k) entry is conj(u_{J l}) u_{I k}. Diagonal
  // cells give the magnitudes |u_{I k}|^2; one off-diagonal row per I then
  // recovers the entries against a fixed reference column.
  std::int64_t best_row = 0, best_col = 0;
  double best_mag2 = -1.0;
  const double accept = 0.5 / static_cast<double>(dim);
  for (std::int64_t index = 0; index < dim; ++index) {
    Vector probe;
    double norm2 = 0.0;
    bool found = false;
    for (std::int64_t k = 0; k < dim; ++k) {
      probe = diagonal_chain_apply(ordered, index, k);
      norm2 = probe.squaredNorm();
      if (norm2 >= accept) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw IntegrityError(
          "reconstruct_unitary: grids do not compose to rank-one projectors");
    }
    for (std::int64_t k = 0; k < dim; ++k) {
      const double mag2 = std::norm(probe(k)) / norm2;
      if (mag2 > best_mag2) {
        best_mag2 = mag2;
        best_row = index;
        best_col = k;
      }
    }
  }

  // Row k0 of cell(I, best_row) holds conj(u_{best_row, k0}) u_{I k}.
  const double ref = std::sqrt(best_mag2);
  Matrix out(dim, dim);
  for (std::int64_t index = 0; index < dim; ++index) {
    Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(dim);
    row(best_col) = 1.0;
    for (int q = 1; q <= n; ++q) {
      const std::int64_t ibit = (index >> (n - q)) & 1;
      const std::int64_t rbit = (best_row >> (n - q)) & 1;
      row = row * ordered[static_cast<std::size_t>(q - 1)].cell(ibit, rbit);
    }
    out.row(index) = row / ref;
  }

  if (!is_unitary(out, tol)) {
    throw IntegrityError("reconstruct_unitary: result is not unitary; the "
                         "input grids are inconsistent");
  }
  for (int q = 1; q <= n; ++q) {
    const EvolutionMatrix check =
        build_evolution_matrix(out, QubitSubset(n, {q}));
    const EvolutionMatrix& given = ordered[static_cast<std::size_t>(q - 1)];
    for (std::int64_t i = 0; i < 2; ++i) {
      for (std::int64_t j = 0; j < 2; ++j) {
        if (max_deviation(check.cell(i, j), given.cell(i, j)) > tol) {
          throw IntegrityError(
              "reconstruct_unitary: reconstructed unitary does not reproduce "
              "the description of qubit " + std::to_string(q));
        }
      }
    }
  }
  return out;
}

double alternate_initial_expectation(const std::vector<EvolutionMatrix>& ems,
                                     const Circuit& prep,
                                     const PauliString& obs) {
  const Matrix u = reconstruct_unitary(ems);
  if ((std::int64_t{1} << prep.n) != u.rows()) {
    throw ArgumentError(
        "alternate_initial_expectation: preparation circuit size mismatch");
  }
  if (obs.n != prep.n) {
    throw ArgumentError(
        "alternate_initial_expectation: observable size mismatch");
  }
  const Vector prepared = run_state(prep);
  const Vector evolved = u * prepared;
  return expectation_observable(evolved, pauli_string_matrix(obs));
}

DimensionReport theoretical_dims(int n) {
  if (n < 1) throw ArgumentError("theoretical_dims: n must be positive");
  if (n > 30) throw ResourceError("theoretical_dims: n too large for exact "
                                  "integer arithmetic");
  DimensionReport report;
  report.n = n;
  report.descriptor_dim = 3 * (std::int64_t{1} << (2 * n - 2));
  report.universal_dim = (std::int64_t{1} << (2 * n)) - 1;
  report.wavefunction_dim = (std::int64_t{1} << (n + 1)) - 2;
  report.density_dim = 3;
  return report;
}

namespace {

/// exp(s D) for the sparse anti-Hermitian basis directions, in closed form.
Matrix exp_diag_direction(std::int64_t dim, std::int64_t a, double s) {
  Matrix m = Matrix::Identity(dim, dim);
  m(a, a) = std::exp(Complex(0, s));
  return m;
}

Matrix exp_rotation_direction(std::int64_t dim, std::int64_t a, std::int64_t b,
                              double s, bool imaginary) {
  Matrix m = Matrix::Identity(dim, dim);
  m(a, a) = std::cos(s);
  m(b, b) = std::cos(s);
  if (imaginary) {
    m(a, b) = Complex(0, std::sin(s));
    m(b, a) = Complex(0, std::sin(s));
  } else {
    m(a, b) = std::sin(s);
    m(b, a) = -std::sin(s);
  }
  return m;
}

void append_column(RealMatrix& jac, Eigen::Index col,
                   const EvolutionMatrix& plus, const EvolutionMatrix& minus,
                   double h) {
  Eigen::Index row = 0;
  for (std::int64_t i = 0; i < plus.dim(); ++i) {
    for (std::int64_t j = 0; j < plus.dim(); ++j) {
      const Matrix diff = (plus.cell(i, j) - minus.cell(i, j)) / (2.0 * h);
      for (Eigen::Index r = 0; r < diff.rows(); ++r) {
        for (Eigen::Index c = 0; c < diff.cols(); ++c) {
          jac(row++, col) = diff(r, c).real();
          jac(row++, col) = diff(r, c).imag();
        }
      }
    }
  }
}

}  // namespace

int empirical_descriptor_dim(int n, int k, double h, double rank_tol) {
  if (n < 1) throw ArgumentError("empirical_descriptor_dim: n must be "
                                 "positive");
  if (k < 1 || k > n) {
    throw ArgumentError("empirical_descriptor_dim: qubit index out of range");
  }
  if (n > 4) {
    throw ResourceError(
        "empirical_descriptor_dim: Jacobian rank is capped at n <= 4");
  }
  if (h <= 0) throw ArgumentError("empirical_descriptor_dim: step must be "
                                  "positive");
  const std::int64_t dim = std::int64_t{1} << n;
  const QubitSubset qubit(n, {k});
  const Eigen::Index rows = 8 * dim * dim;   // re/im of four 2^n x 2^n cells
  const Eigen::Index cols = dim * dim;       // 4^n tangent directions
  RealMatrix jac(rows, cols);

  Eigen::Index col = 0;
  for (std::int64_t a = 0; a < dim; ++a) {
    append_column(jac, col++,
                  build_evolution_matrix(exp_diag_direction(dim, a, h), qubit),
                  build_evolution_matrix(exp_diag_direction(dim, a, -h), qubit),
                  h);
  }
  for (std::int64_t a = 0; a < dim; ++a) {
    for (std::int64_t b = a + 1; b < dim; ++b) {
      for (bool imaginary : {false, true}) {
        append_column(
            jac, col++,
            build_evolution_matrix(
                exp_rotation_direction(dim, a, b, h, imaginary), qubit),
            build_evolution_matrix(
                exp_rotation_direction(dim, a, b, -h, imaginary), qubit),
            h);
      }
    }
  }

  const double scale = std::max(1.0, jac.cwiseAbs().maxCoeff());
  return numerical_rank(jac, rank_tol * scale);
}

}  // namespace qlocal
