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

#include "qlocal/evolution.hpp"

#include <string>

#include "qlocal/errors.hpp"

namespace qlocal {

namespace {

/// Scatters a subset-local index (bits ordered by sub's members, first
/// member = most significant) onto the index word of a larger sorted subset.
std::int64_t subset_scatter(std::int64_t value, const std::vector<int>& sub,
                            const std::vector<int>& super) {
  const int bits = static_cast<int>(super.size());
  std::int64_t out = 0;
  int vbit = static_cast<int>(sub.size()) - 1;
  for (int q : sub) {
    int rank = 0;
    while (rank < bits && super[static_cast<std::size_t>(rank)] != q) ++rank;
    const std::int64_t bit = (value >> vbit) & 1;
    out |= bit << (bits - 1 - rank);
    --vbit;
  }
  return out;
}

}  // namespace

EvolutionMatrix::EvolutionMatrix(QubitSubset subset, std::vector<Matrix> grid)
    : subset_(std::move(subset)), grid_(std::move(grid)) {
  const std::int64_t d = subset_.dim();
  if (static_cast<std::int64_t>(grid_.size()) != d * d) {
    throw ArgumentError("EvolutionMatrix: grid must have d_A^2 cells");
  }
  const std::int64_t full = std::int64_t{1} << subset_.n();
  for (const Matrix& m : grid_) {
    if (m.rows() != full || m.cols() != full) {
      throw ArgumentError("EvolutionMatrix: cells must be 2^n x 2^n");
    }
  }
}

const Matrix& EvolutionMatrix::cell(std::int64_t i, std::int64_t j) const {
  return grid_[static_cast<std::size_t>(i * dim() + j)];
}

Matrix& EvolutionMatrix::cell(std::int64_t i, std::int64_t j) {
  return grid_[static_cast<std::size_t>(i * dim() + j)];
}

void validate_evolution_matrix(const EvolutionMatrix& em, double pair_tol,
                               double product_tol) {
  const std::int64_t d = em.dim();
  const std::int64_t full = std::int64_t{1} << em.n();

  for (std::int64_t i = 0; i < d; ++i) {
    for (std::int64_t j = 0; j < d; ++j) {
      if (max_deviation(em.cell(i, j).adjoint(), em.cell(j, i)) > pair_tol) {
        throw IntegrityError("evolution matrix: Hermitian pairing fails at (" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  Matrix sum = Matrix::Zero(full, full);
  for (std::int64_t i = 0; i < d; ++i) sum += em.cell(i, i);
  if (max_deviation(sum, identity(full)) > pair_tol) {
    throw IntegrityError("evolution matrix: diagonal does not resolve the "
                         "identity");
  }

  for (std::int64_t i = 0; i < d; ++i) {
    for (std::int64_t j = 0; j < d; ++j) {
      for (std::int64_t k = 0; k < d; ++k) {
        for (std::int64_t l = 0; l < d; ++l) {
          const Matrix product = em.cell(i, j) * em.cell(k, l);
          const Matrix expected =
              (i == l) ? em.cell(k, j) : Matrix::Zero(full, full);
          if (max_deviation(product, expected) > product_tol) {
            throw IntegrityError("evolution matrix: product relation fails");
          }
        }
      }
    }
  }
}

EvolutionMatrix build_evolution_matrix(const Matrix& u, const QubitSubset& a,
                                       double tol) {
  const std::int64_t full = std::int64_t{1} << a.n();
  if (u.rows() != full || u.cols() != full) {
    throw ArgumentError("build_evolution_matrix: unitary dimension mismatch");
  }
  if (!is_unitary(u, tol)) {
    throw ArgumentError("build_evolution_matrix: matrix is not unitary");
  }
  const std::int64_t d = a.dim();
  std::vector<Matrix> grid;
  grid.reserve(static_cast<std::size_t>(d * d));
  const Matrix udag = u.adjoint();
  for (std::int64_t i = 0; i < d; ++i) {
    for (std::int64_t j = 0; j < d; ++j) {
      grid.push_back(udag * embed_on_subset(ket_bra(d, j, i), a) * u);
    }
  }
  return EvolutionMatrix(a, std::move(grid));
}

EvolutionMatrix evolve_local(const Matrix& v, const EvolutionMatrix& em) {
  const std::int64_t d = em.dim();
  if (v.rows() != d || v.cols() != d) {
    throw ArgumentError("evolve_local: unitary must act on the subsystem "
                        "dimension " + std::to_string(d));
  }
  const std::int64_t full = std::int64_t{1} << em.n();

  // tmp[m][j] = sum_nn cell(m, nn) conj(v_j,nn), then contract over m.
  std::vector<Matrix> tmp(static_cast<std::size_t>(d * d),
                          Matrix::Zero(full, full));
  for (std::int64_t m = 0; m < d; ++m) {
    for (std::int64_t j = 0; j < d; ++j) {
      Matrix& acc = tmp[static_cast<std::size_t>(m * d + j)];
      for (std::int64_t nn = 0; nn < d; ++nn) {
        acc += std::conj(v(j, nn)) * em.cell(m, nn);
      }
    }
  }
  std::vector<Matrix> grid(static_cast<std::size_t>(d * d),
                           Matrix::Zero(full, full));
  for (std::int64_t i = 0; i < d; ++i) {
    for (std::int64_t j = 0; j < d; ++j) {
      Matrix& acc = grid[static_cast<std::size_t>(i * d + j)];
      for (std::int64_t m = 0; m < d; ++m) {
        acc += v(i, m) * tmp[static_cast<std::size_t>(m * d + j)];
      }
    }
  }
  return EvolutionMatrix(em.subset(), std::move(grid));
}

EvolutionMatrix trace_out(const EvolutionMatrix& em, const QubitSubset& b) {
  if (!em.subset().contains(b)) {
    throw ArgumentError("trace_out: traced qubits must lie in the subsystem");
  }
  const QubitSubset kept = em.subset().minus(b);
  const std::int64_t dk = kept.dim();
  const std::int64_t db = b.dim();
  const std::int64_t full = std::int64_t{1} << em.n();

  std::vector<Matrix> grid(static_cast<std::size_t>(dk * dk),
                           Matrix::Zero(full, full));
  for (std::int64_t i = 0; i < dk; ++i) {
    const std::int64_t pi = subset_scatter(i, kept.members(),
                                           em.subset().members());
    for (std::int64_t j = 0; j < dk; ++j) {
      const std::int64_t pj = subset_scatter(j, kept.members(),
                                             em.subset().members());
      Matrix& acc = grid[static_cast<std::size_t>(i * dk + j)];
      for (std::int64_t k = 0; k < db; ++k) {
        const std::int64_t pk = subset_scatter(k, b.members(),
                                               em.subset().members());
        acc += em.cell(pi | pk, pj | pk);
      }
    }
  }
  return EvolutionMatrix(kept, std::move(grid));
}

EvolutionMatrix join(const EvolutionMatrix& ema, const EvolutionMatrix& emb) {
  if (ema.n() != emb.n()) {
    throw ArgumentError("join: operands describe networks of different size");
  }
  if (!ema.subset().disjoint_from(emb.subset())) {
    throw ArgumentError("join: subsets overlap");
  }
  const QubitSubset united = ema.subset().disjoint_union(emb.subset());
  const std::int64_t da = ema.dim();
  const std::int64_t db = emb.dim();
  const std::int64_t du = united.dim();

  std::vector<Matrix> grid(static_cast<std::size_t>(du * du));
  for (std::int64_t i = 0; i < da; ++i) {
    const std::int64_t pi = subset_scatter(i, ema.subset().members(),
                                           united.members());
    for (std::int64_t k = 0; k < db; ++k) {
      const std::int64_t pk = subset_scatter(k, emb.subset().members(),
                                             united.members());
      for (std::int64_t j = 0; j < da; ++j) {
        const std::int64_t pj = subset_scatter(j, ema.subset().members(),
                                               united.members());
        for (std::int64_t l = 0; l < db; ++l) {
          const std::int64_t pl = subset_scatter(l, emb.subset().members(),
                                                 united.members());
          grid[static_cast<std::size_t>((pi | pk) * du + (pj | pl))] =
              ema.cell(i, j) * emb.cell(k, l);
        }
      }
    }
  }
  return EvolutionMatrix(united, std::move(grid));
}

DensityMatrix morphism_phi(const EvolutionMatrix& em) {
  const std::int64_t d = em.dim();
  Matrix rho(d, d);
  for (std::int64_t i = 0; i < d; ++i) {
    for (std::int64_t j = 0; j < d; ++j) {
      // tr(M |0..0><0..0|) = M(0, 0).
      rho(i, j) = em.cell(i, j)(0, 0);
    }
  }
  return DensityMatrix{em.subset(), std::move(rho)};
}

}  // namespace qlocal
