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

#include <memory>
#include <string>
#include <vector>

#include "qlocal/linalg.hpp"

namespace qlocal {

/// One gate application; one gate per discrete time step.
///
/// Built-in vocabulary: X Y Z H S T RX RY RZ PHASE CNOT CZ SWAP CCNOT.
/// Angles are radians. Conventions: H = (1/sqrt2)[[1,1],[1,-1]],
/// S = diag(1,i), T = diag(1, e^{i pi/4}), RW(t) = exp(-i t sigma_w / 2),
/// PHASE(t) = diag(1, e^{it}). For multi-qubit gates the first listed target
/// is the control (first two for CCNOT).
struct GateOp {
  std::string name;
  std::vector<int> targets;
  std::vector<double> params;
  /// Set for gates declared inline with `gate NAME matrix <json>`.
  std::shared_ptr<const Matrix> custom;

  bool operator==(const GateOp& other) const;
};

struct Circuit {
  int n = 0;
  std::vector<GateOp> ops;

  bool operator==(const Circuit& other) const;
};

/// True if the name is in the built-in vocabulary.
bool is_builtin_gate(const std::string& name);

/// Number of qubits the named built-in gate acts on.
int builtin_arity(const std::string& name);

/// Number of angle parameters the named built-in gate takes.
int builtin_param_count(const std::string& name);

/// The 2^k x 2^k unitary of a built-in gate.
Matrix builtin_gate(const std::string& name,
                    const std::vector<double>& params = {});

/// The small matrix of an op (built-in or custom).
Matrix gate_matrix(const GateOp& op);

/// Parses the line-oriented circuit format:
///   # comment
///   qubits N
///   NAME [param(...)] target [target2 ...]
///   gate NAME matrix <json>
/// Throws ParseError with a machine-readable code and line number.
Circuit parse_circuit(const std::string& text);

/// Inverse serializer; parse_circuit(render_circuit(c)) == c.
std::string render_circuit(const Circuit& c);

/// U = G_T ... G_2 G_1, each gate embedded into the full 2^n space.
Matrix global_unitary(const Circuit& c);

/// [U_0 = I, U_1, ..., U_T] with U_t = G_t U_{t-1}.
std::vector<Matrix> prefix_unitaries(const Circuit& c);

/// Validates targets/arity/params of every op against the circuit size.
void validate_circuit(const Circuit& c);

}  // namespace qlocal
