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

#include "qlocal/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "qlocal/errors.hpp"
#include "qlocal/json_io.hpp"

namespace qlocal {

namespace {

struct GateSpec {
  int arity;
  int params;
};

const std::map<std::string, GateSpec>& gate_table() {
  static const std::map<std::string, GateSpec> table = {
      {"X", {1, 0}},    {"Y", {1, 0}},     {"Z", {1, 0}},  {"H", {1, 0}},
      {"S", {1, 0}},    {"T", {1, 0}},     {"RX", {1, 1}}, {"RY", {1, 1}},
      {"RZ", {1, 1}},   {"PHASE", {1, 1}}, {"CNOT", {2, 0}},
      {"CZ", {2, 0}},   {"SWAP", {2, 0}},  {"CCNOT", {3, 0}},
  };
  return table;
}

Matrix rotation(const Matrix& generator, double theta) {
  // exp(-i theta sigma/2) for an involutory generator.
  return std::cos(theta / 2) * identity2() -
         Complex(0, 1) * std::sin(theta / 2) * generator;
}

bool matrices_equal(const std::shared_ptr<const Matrix>& a,
                    const std::shared_ptr<const Matrix>& b) {
  if (!a && !b) return true;
  if (!a || !b) return false;
  return a->rows() == b->rows() && a->cols() == b->cols() && *a == *b;
}

}  // namespace

bool GateOp::operator==(const GateOp& other) const {
  return name == other.name && targets == other.targets &&
         params == other.params && matrices_equal(custom, other.custom);
}

bool Circuit::operator==(const Circuit& other) const {
  return n == other.n && ops == other.ops;
}

bool is_builtin_gate(const std::string& name) {
  return gate_table().count(name) > 0;
}

int builtin_arity(const std::string& name) {
  auto it = gate_table().find(name);
  if (it == gate_table().end()) {
    throw ArgumentError("unknown gate " + name);
  }
  return it->second.arity;
}

int builtin_param_count(const std::string& name) {
  auto it = gate_table().find(name);
  if (it == gate_table().end()) {
    throw ArgumentError("unknown gate " + name);
  }
  return it->second.params;
}

Matrix builtin_gate(const std::string& name,
                    const std::vector<double>& params) {
  auto it = gate_table().find(name);
  if (it == gate_table().end()) {
    throw ArgumentError("unknown gate " + name);
  }
  if (static_cast<int>(params.size()) != it->second.params) {
    throw ArgumentError("gate " + name + " takes " +
                        std::to_string(it->second.params) + " parameter(s)");
  }

  const double s = 1.0 / std::numbers::sqrt2;
  if (name == "X") return pauli_x();
  if (name == "Y") return pauli_y();
  if (name == "Z") return pauli_z();
  if (name == "H") {
    Matrix h(2, 2);
    h << s, s, s, -s;
    return h;
  }
  if (name == "S") {
    Matrix m(2, 2);
    m << 1, 0, 0, Complex(0, 1);
    return m;
  }
  if (name == "T") {
    Matrix m(2, 2);
    m << 1, 0, 0, std::exp(Complex(0, std::numbers::pi / 4));
    return m;
  }
  if (name == "RX") return rotation(pauli_x(), params[0]);
  if (name == "RY") return rotation(pauli_y(), params[0]);
  if (name == "RZ") return rotation(pauli_z(), params[0]);
  if (name == "PHASE") {
    Matrix m(2, 2);
    m << 1, 0, 0, std::exp(Complex(0, params[0]));
    return m;
  }
  if (name == "CNOT") {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
    return m;
  }
  if (name == "CZ") {
    Matrix m = Matrix::Identity(4, 4);
    m(3, 3) = -1.0;
    return m;
  }
  if (name == "SWAP") {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
    return m;
  }
  // CCNOT
  Matrix m = Matrix::Identity(8, 8);
  m(6, 6) = m(7, 7) = 0.0;
  m(6, 7) = m(7, 6) = 1.0;
  return m;
}

Matrix gate_matrix(const GateOp& op) {
  if (op.custom) return *op.custom;
  return builtin_gate(op.name, op.params);
}

namespace {

struct Tokenizer {
  static std::string strip_comment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
  }

  static std::vector<std::string> split(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
  }
};

double parse_double(const std::string& tok, int line) {
  double value = 0.0;
  const char* begin = tok.data();
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(ParseCode::MalformedNumber, line,
                     "cannot parse number '" + tok + "'");
  }
  return value;
}

int parse_target(const std::string& tok, int line) {
  int value = 0;
  const char* begin = tok.data();
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(ParseCode::MalformedNumber, line,
                     "cannot parse qubit index '" + tok + "'");
  }
  return value;
}

/// Splits "NAME(p1,p2)" into the name and parameter list.
std::pair<std::string, std::vector<double>> parse_head(const std::string& tok,
                                                       int line) {
  const auto open = tok.find('(');
  if (open == std::string::npos) return {tok, {}};
  if (tok.back() != ')') {
    throw ParseError(ParseCode::MalformedLine, line,
                     "unterminated parameter list in '" + tok + "'");
  }
  const std::string name = tok.substr(0, open);
  const std::string inner = tok.substr(open + 1, tok.size() - open - 2);
  std::vector<double> params;
  std::size_t start = 0;
  while (start <= inner.size()) {
    const auto comma = inner.find(',', start);
    const std::string piece =
        inner.substr(start, comma == std::string::npos ? std::string::npos
                                                       : comma - start);
    if (!piece.empty()) params.push_back(parse_double(piece, line));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return {name, params};
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  Circuit circuit;
  std::map<std::string, std::shared_ptr<const Matrix>> custom_gates;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string stripped = Tokenizer::strip_comment(raw);
    const auto tokens = Tokenizer::split(stripped);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens[0] != "qubits" || tokens.size() != 2) {
        throw ParseError(ParseCode::MissingHeader, line_no,
                         "expected 'qubits N' before any gate");
      }
      circuit.n = parse_target(tokens[1], line_no);
      if (circuit.n < 1) {
        throw ParseError(ParseCode::MissingHeader, line_no,
                         "qubit count must be positive");
      }
      have_header = true;
      continue;
    }

    if (tokens[0] == "gate") {
      // gate NAME matrix <json>
      if (tokens.size() < 4 || tokens[2] != "matrix") {
        throw ParseError(ParseCode::MalformedLine, line_no,
                         "expected 'gate NAME matrix <json>'");
      }
      const std::string& name = tokens[1];
      if (is_builtin_gate(name) || custom_gates.count(name)) {
        throw ParseError(ParseCode::BadCustomGate, line_no,
                         "gate name '" + name + "' already defined");
      }
      const auto json_begin = stripped.find("matrix");
      const std::string payload = stripped.substr(json_begin + 6);
      Matrix m;
      try {
        m = matrix_from_json_text(payload);
      } catch (const std::exception& e) {
        throw ParseError(ParseCode::BadCustomGate, line_no, e.what());
      }
      if (m.rows() != m.cols() || m.rows() < 2 ||
          (m.rows() & (m.rows() - 1)) != 0) {
        throw ParseError(ParseCode::BadCustomGate, line_no,
                         "custom gate must be square with power-of-two size");
      }
      if (!is_unitary(m, kDefaultTol)) {
        throw ParseError(ParseCode::BadCustomGate, line_no,
                         "custom gate '" + name + "' is not unitary");
      }
      custom_gates[name] = std::make_shared<const Matrix>(std::move(m));
      continue;
    }

    auto [name, params] = parse_head(tokens[0], line_no);
    GateOp op;
    op.name = name;
    op.params = std::move(params);

    int arity = 0;
    if (is_builtin_gate(name)) {
      arity = builtin_arity(name);
      if (static_cast<int>(op.params.size()) != builtin_param_count(name)) {
        throw ParseError(ParseCode::WrongParamCount, line_no,
                         "gate " + name + " takes " +
                             std::to_string(builtin_param_count(name)) +
                             " parameter(s)");
      }
    } else if (auto it = custom_gates.find(name); it != custom_gates.end()) {
      op.custom = it->second;
      int k = 0;
      while ((Eigen::Index{1} << k) < it->second->rows()) ++k;
      arity = k;
      if (!op.params.empty()) {
        throw ParseError(ParseCode::WrongParamCount, line_no,
                         "custom gate " + name + " takes no parameters");
      }
    } else {
      throw ParseError(ParseCode::UnknownGate, line_no,
                       "unknown gate '" + name + "'");
    }

    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const int target = parse_target(tokens[i], line_no);
      if (target < 1 || target > circuit.n) {
        throw ParseError(ParseCode::TargetOutOfRange, line_no,
                         "target " + std::to_string(target) +
                             " out of range [1, " + std::to_string(circuit.n) +
                             "]");
      }
      if (std::find(op.targets.begin(), op.targets.end(), target) !=
          op.targets.end()) {
        throw ParseError(ParseCode::DuplicateTarget, line_no,
                         "duplicate target " + std::to_string(target));
      }
      op.targets.push_back(target);
    }
    if (static_cast<int>(op.targets.size()) != arity) {
      throw ParseError(ParseCode::WrongArity, line_no,
                       "gate " + name + " acts on " + std::to_string(arity) +
                           " qubit(s), got " +
                           std::to_string(op.targets.size()));
    }
    circuit.ops.push_back(std::move(op));
  }

  if (!have_header) {
    throw ParseError(ParseCode::MissingHeader, line_no + 1,
                     "missing 'qubits N' header");
  }
  return circuit;
}

std::string render_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.n << "\n";
  // Declare each distinct custom gate before first use.
  std::map<std::string, bool> declared;
  for (const auto& op : c.ops) {
    if (op.custom && !declared[op.name]) {
      out << "gate " << op.name << " matrix " << matrix_to_json_text(*op.custom)
          << "\n";
      declared[op.name] = true;
    }
  }
  for (const auto& op : c.ops) {
    out << op.name;
    if (!op.params.empty()) {
      out << "(";
      for (std::size_t i = 0; i < op.params.size(); ++i) {
        if (i) out << ",";
        out << format_double(op.params[i]);
      }
      out << ")";
    }
    for (int t : op.targets) out << " " << t;
    out << "\n";
  }
  return out.str();
}

void validate_circuit(const Circuit& c) {
  if (c.n < 1) throw ArgumentError("circuit must have at least one qubit");
  for (const auto& op : c.ops) {
    std::vector<bool> seen(static_cast<std::size_t>(c.n) + 1, false);
    for (int t : op.targets) {
      if (t < 1 || t > c.n) {
        throw ArgumentError("target out of range in gate " + op.name);
      }
      if (seen[static_cast<std::size_t>(t)]) {
        throw ArgumentError("duplicate target in gate " + op.name);
      }
      seen[static_cast<std::size_t>(t)] = true;
    }
    const Matrix m = gate_matrix(op);
    if (m.rows() != (Eigen::Index{1} << op.targets.size())) {
      throw ArgumentError("gate " + op.name + " dimension mismatch");
    }
    if (op.custom && !is_unitary(*op.custom, kDefaultTol)) {
      throw ArgumentError("custom gate " + op.name + " is not unitary");
    }
  }
}

Matrix global_unitary(const Circuit& c) {
  validate_circuit(c);
  const std::int64_t dim = std::int64_t{1} << c.n;
  if (dim > kDimCap) {
    throw ResourceError("global_unitary: 2^" + std::to_string(c.n) +
                        " exceeds the dimension cap");
  }
  Matrix u = identity(dim);
  for (const auto& op : c.ops) {
    u = embed_gate(gate_matrix(op), op.targets, c.n) * u;
  }
  return u;
}

std::vector<Matrix> prefix_unitaries(const Circuit& c) {
  validate_circuit(c);
  const std::int64_t dim = std::int64_t{1} << c.n;
  if (dim > kDimCap) {
    throw ResourceError("prefix_unitaries: 2^" + std::to_string(c.n) +
                        " exceeds the dimension cap");
  }
  std::vector<Matrix> prefixes;
  prefixes.reserve(c.ops.size() + 1);
  prefixes.push_back(identity(dim));
  for (const auto& op : c.ops) {
    prefixes.push_back(embed_gate(gate_matrix(op), op.targets, c.n) *
                       prefixes.back());
  }
  return prefixes;
}

}  // namespace qlocal
