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

#include "qlocal/descriptor.hpp"

#include <algorithm>
#include <cmath>

#include "qlocal/errors.hpp"

namespace qlocal {

namespace {

const Matrix& pauli_of(PauliLetter w) {
  switch (w) {
    case PauliLetter::X: return pauli_x();
    case PauliLetter::Y: return pauli_y();
    case PauliLetter::Z: return pauli_z();
  }
  return pauli_x();  // unreachable
}

}  // namespace

void validate_descriptor(const Descriptor& d, double tol) {
  const std::int64_t dim = std::int64_t{1} << d.n;
  if (d.qubit < 1 || d.qubit > d.n) {
    throw IntegrityError("descriptor qubit index out of range");
  }
  if (d.qx.rows() != dim || d.qx.cols() != dim || d.qz.rows() != dim ||
      d.qz.cols() != dim) {
    throw IntegrityError("descriptor components have wrong dimension");
  }
  const Matrix id = identity(dim);
  if (!is_hermitian(d.qx, tol) || !is_hermitian(d.qz, tol)) {
    throw IntegrityError("descriptor components must be Hermitian");
  }
  if (!is_unitary(d.qx, tol) || !is_unitary(d.qz, tol)) {
    throw IntegrityError("descriptor components must be unitary");
  }
  if (max_deviation(d.qx * d.qx, id) > tol ||
      max_deviation(d.qz * d.qz, id) > tol) {
    throw IntegrityError("descriptor components must square to identity");
  }
  if (max_norm(d.qx * d.qz + d.qz * d.qx) > tol) {
    throw IntegrityError("descriptor components must anticommute");
  }
}

Matrix pauli_string_matrix(const PauliString& p) {
  if (p.n < 1) throw ArgumentError("pauli_string_matrix: n must be positive");
  const std::int64_t dim = std::int64_t{1} << p.n;
  if (dim > kDimCap) {
    throw ResourceError("pauli_string_matrix: dimension exceeds cap");
  }
  Matrix out = p.coefficient * identity(dim);
  for (const auto& [qubit, letter] : p.letters) {
    if (qubit < 1 || qubit > p.n) {
      throw ArgumentError("pauli_string_matrix: qubit index out of range");
    }
    out = out * embed_gate(pauli_of(letter), {qubit}, p.n);
  }
  return out;
}

Descriptor initial_descriptor(int k, int n) {
  if (n < 1) throw ArgumentError("initial_descriptor: n must be positive");
  if (k < 1 || k > n) {
    throw ArgumentError("initial_descriptor: qubit index out of range");
  }
  return Descriptor{k, n, embed_gate(pauli_x(), {k}, n),
                    embed_gate(pauli_z(), {k}, n)};
}

Descriptor evolve_descriptor(const Descriptor& d, const Matrix& u,
                             double tol) {
  const std::int64_t dim = std::int64_t{1} << d.n;
  if (u.rows() != dim || u.cols() != dim) {
    throw ArgumentError("evolve_descriptor: unitary dimension mismatch");
  }
  if (!is_unitary(u, tol)) {
    throw ArgumentError("evolve_descriptor: matrix is not unitary");
  }
  return Descriptor{d.qubit, d.n, u.adjoint() * d.qx * u,
                    u.adjoint() * d.qz * u};
}

Matrix descriptor_y(const Descriptor& d) {
  return Complex(0, 1) * d.qx * d.qz;
}

double expectation_pauli(const std::vector<Descriptor>& descs,
                         const PauliString& p) {
  if (p.n < 1) throw ArgumentError("expectation_pauli: n must be positive");
  const std::int64_t dim = std::int64_t{1} << p.n;

  // Components of distinct qubits commute, so ascending order is a
  // convention, not a requirement (std::map iterates ascending).
  Matrix product = identity(dim);
  for (const auto& [qubit, letter] : p.letters) {
    const Descriptor* found = nullptr;
    for (const auto& d : descs) {
      if (d.qubit == qubit) {
        found = &d;
        break;
      }
    }
    if (found == nullptr) {
      throw ArgumentError("expectation_pauli: no descriptor for qubit " +
                          std::to_string(qubit));
    }
    if (found->n != p.n) {
      throw ArgumentError("expectation_pauli: descriptor network size "
                          "mismatch");
    }
    switch (letter) {
      case PauliLetter::X: product = product * found->qx; break;
      case PauliLetter::Y: product = product * descriptor_y(*found); break;
      case PauliLetter::Z: product = product * found->qz; break;
    }
  }
  const Complex value = p.coefficient * product(0, 0);
  if (std::abs(value.imag()) >= 1e-10) {
    throw IntegrityError("expectation_pauli: expectation has a non-real part");
  }
  return value.real();
}

DensityMatrix reduced_density_from_descriptor(const Descriptor& d) {
  // <0|M|0> is the (0,0) entry for the reference vector |0...0>.
  const double px = d.qx(0, 0).real();
  const double py = descriptor_y(d)(0, 0).real();
  const double pz = d.qz(0, 0).real();
  Matrix rho = 0.5 * (identity2() + px * pauli_x() + py * pauli_y() +
                      pz * pauli_z());
  return DensityMatrix{QubitSubset(d.n, {d.qubit}), std::move(rho)};
}

LocalityReport check_locality(const Circuit& c, int k, double tol) {
  validate_circuit(c);
  if (k < 1 || k > c.n) {
    throw ArgumentError("check_locality: qubit index out of range");
  }
  LocalityReport report;
  report.qubit = k;
  report.tol = tol;

  const auto prefixes = prefix_unitaries(c);
  Descriptor prev = initial_descriptor(k, c.n);
  for (std::size_t t = 1; t < prefixes.size(); ++t) {
    const GateOp& op = c.ops[t - 1];
    const Descriptor cur = evolve_descriptor(initial_descriptor(k, c.n),
                                             prefixes[t]);
    LocalityStep step;
    step.step = static_cast<int>(t);
    step.gate = op.name;
    step.disjoint = std::find(op.targets.begin(), op.targets.end(), k) ==
                    op.targets.end();
    step.deviation = std::max(max_deviation(cur.qx, prev.qx),
                              max_deviation(cur.qz, prev.qz));
    step.pass = !step.disjoint || step.deviation <= tol;
    if (step.disjoint) {
      report.max_disjoint_deviation =
          std::max(report.max_disjoint_deviation, step.deviation);
    }
    report.all_pass = report.all_pass && step.pass;
    report.steps.push_back(std::move(step));
    prev = cur;
  }
  return report;
}

}  // namespace qlocal
