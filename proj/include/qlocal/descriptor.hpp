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

#include <map>
#include <string>
#include <vector>

#include "qlocal/circuit.hpp"
#include "qlocal/linalg.hpp"
#include "qlocal/schrodinger.hpp"

namespace qlocal {

/// Complete local description of one qubit: the conjugated pair
/// (qx, qz) = U' (sigma_x, sigma_z embedded on the qubit) U, with the dagger
/// on the left. The y component is redundant and recomputed on demand.
struct Descriptor {
  int qubit = 0;
  int n = 0;
  Matrix qx;
  Matrix qz;
};

/// Throws IntegrityError unless qx, qz are Hermitian involutions that
/// anticommute (the Pauli algebra survives conjugation).
void validate_descriptor(const Descriptor& d, double tol = kDefaultTol);

enum class PauliLetter { X, Y, Z };

/// A scaled tensor product of single-qubit Paulis (identity off the support).
struct PauliString {
  int n = 0;
  std::map<int, PauliLetter> letters;
  double coefficient = 1.0;
};

/// The full-space matrix of a Pauli string.
Matrix pauli_string_matrix(const PauliString& p);

/// Descriptor of qubit k at time 0: sigma_x, sigma_z embedded on qubit k.
Descriptor initial_descriptor(int k, int n);

/// Heisenberg step: (u' qx u, u' qz u) for a full-dimension unitary u.
Descriptor evolve_descriptor(const Descriptor& d, const Matrix& u,
                             double tol = kDefaultTol);

/// The redundant third component i * qx * qz.
Matrix descriptor_y(const Descriptor& d);

/// Expectation <0| prod_k q_{k,letter(k)} |0> * coefficient, taking the
/// product over the string's support in ascending qubit order. Requires a
/// descriptor (evolved by the same U) for every supported qubit.
double expectation_pauli(const std::vector<Descriptor>& descs,
                         const PauliString& p);

/// Reduced density of the descriptor's qubit from the three Pauli
/// polarizations p_w = <0| q_w |0>.
DensityMatrix reduced_density_from_descriptor(const Descriptor& d);

/// Per-step record of a locality check.
struct LocalityStep {
  int step = 0;            // 1-based time step
  std::string gate;
  bool disjoint = false;   // gate targets exclude the tracked qubit
  double deviation = 0.0;  // max-norm change of the descriptor at this step
  bool pass = true;        // disjoint steps must leave the descriptor fixed
};

struct LocalityReport {
  int qubit = 0;
  double tol = 0.0;
  std::vector<LocalityStep> steps;
  bool all_pass = true;
  double max_disjoint_deviation = 0.0;
};

/// Steps through the circuit prefixes and verifies that every gate acting
/// away from qubit k leaves k's descriptor unchanged.
LocalityReport check_locality(const Circuit& c, int k, double tol = 1e-12);

}  // namespace qlocal
