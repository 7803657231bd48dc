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
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zxsim/circuit.hpp"
#include "zxsim/scalar.hpp"

namespace zxsim {

/**
 * Generator randomness, version "zxsim-prng-1": std::mt19937_64 seeded with
 * the 64-bit seed, and bounded draws by rejection so that instances are the
 * same on every platform (std::uniform_int_distribution is not).
 */
class Prng {
 public:
  static constexpr const char* kName = "zxsim-prng-1";
  explicit Prng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [0, 1) with 53 bits.
  double unit();

 private:
  std::mt19937_64 engine_;
};

struct PauliExpSpec {
  std::size_t n_qubits = 0;
  /// Number of exponentials; each carries one odd phase.
  std::size_t count = 0;
  std::size_t w_min = 2;
  std::size_t w_max = 4;
  std::uint64_t seed = 0;
};

/// exp(-i (alpha pi/4) / 2 P) for P = paulis[0] (x) paulis[1] ... on `qubits`.
struct PauliExp {
  std::vector<std::size_t> qubits;
  /// One of 'X', 'Y', 'Z' per qubit.
  std::string paulis;
  int alpha = 1;
};

/// The random exponentials behind gen_pauli_exp, in circuit order.
std::vector<PauliExp> draw_pauli_exps(const PauliExpSpec& spec);
/// Basis change, CNOT ladder onto the last qubit, rz(alpha), and back.
/// Y is rotated to Z by sdg then h, and back by h then s.
Circuit synthesize(std::size_t n_qubits, const std::vector<PauliExp>& exps);
/// synthesize(spec.n_qubits, draw_pauli_exps(spec)).
Circuit gen_pauli_exp(const PauliExpSpec& spec);

struct HiddenShiftSpec {
  std::size_t n_qubits = 0;
  /// Total over both oracles; must be even.
  std::size_t n_ccz = 0;
  /// Random CZ gates per qubit of one half, in each oracle.
  double cz_density = 1.0;
  /// Probability of a Z gate on each qubit of one half, in each oracle.
  double z_density = 0.5;
  std::uint64_t seed = 0;
};

struct HiddenShift {
  Circuit circuit;
  std::vector<int> shift;
};

/**
 * Hidden shift over {H, Z, CZ, CCZ} for the bent function
 * f(x, y) = x.y + g(y) and its dual x.y + g(x), n = 2m qubits with x on
 * qubits 0..m-1. The circuit maps |0...0> to |shift>; up to
 * kSelfTestQubits this is checked by dense simulation on every call.
 */
inline constexpr std::size_t kSelfTestQubits = 10;
HiddenShift gen_hidden_shift(const HiddenShiftSpec& spec);

/// 7^ceil(t/6), with t doubled first when `doubled`.
BigInt naive_terms(std::size_t t, bool doubled = false);

}  // namespace zxsim
