// Copyright 2026 The zxsim Authors
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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "zxsim/diagram.hpp"

namespace zxsim {

enum class GateKind { CNOT, CZ, CCZ, H, X, Z, S, Sdg, T, Tdg, ZPhase, XPhase };

struct Gate {
  GateKind kind;
  std::vector<std::size_t> qubits;
  /// Phase in units of pi/4 for ZPhase/XPhase, mod 8; unused otherwise.
  int m = 0;

  bool operator==(const Gate&) const = default;
};

/// Number of qubit operands a gate kind takes.
std::size_t arity(GateKind k);
std::string_view gate_name(GateKind k);

struct Circuit {
  std::size_t n_qubits = 0;
  std::vector<Gate> gates;

  Circuit() = default;
  explicit Circuit(std::size_t n) : n_qubits(n) {}

  /// Appends a gate after checking operand count, range and distinctness.
  Circuit& add(GateKind k, std::vector<std::size_t> qubits, int m = 0);
  Circuit& append(const Circuit& other);
  bool operator==(const Circuit&) const = default;
};

enum class CczMode { SevenT, FourT };

/**
 * Parses the supported OpenQASM 2.0 subset (docs/qasm_subset.md). Errors
 * throw ParseError with a 1-based line and column.
 */
Circuit parse_qasm(std::string_view text);
std::string emit_qasm(const Circuit& c);

/// Diagram of the circuit unitary with inputs and outputs in qubit order; exact scalar included.
Diagram to_zx(const Circuit& c, CczMode mode = CczMode::SevenT);

/// Odd-phase spiders that to_zx emits before any simplification.
std::size_t t_count(const Circuit& c, CczMode mode = CczMode::SevenT);

}  // namespace zxsim
