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

#include <cstdint>
#include <map>
#include <vector>

#include "zxsim/circuit.hpp"
#include "zxsim/decompose.hpp"

namespace zxsim {

struct SimConfig {
  DecomposeConfig decompose;
  CczMode ccz_mode = CczMode::SevenT;
  /// Sample each qubit from its own single-qubit marginal; only valid for
  /// circuits whose output is a basis state, which is checked.
  bool deterministic = false;
  /// Also evaluate P(prefix, 1) while sampling and check it against
  /// P(prefix) - P(prefix, 0).
  bool check_completeness = false;
};

/// <out|U|in>. Bit vectors are indexed by qubit.
Decomposition amplitude(const Circuit& c, const std::vector<int>& in_bits, const std::vector<int>& out_bits,
                        const SimConfig& cfg = {});

/// Probability that the qubits in `fixed` read the given bits, starting from |0...0>.
Decomposition marginal(const Circuit& c, const std::map<std::size_t, int>& fixed, const SimConfig& cfg = {});

struct SampleResult {
  std::vector<int> bits;
  /// Exact probability of `bits`; real.
  Scalar probability;
  /// P(q_i = bits[i] | earlier bits), in floating point.
  std::vector<double> conditionals;
  DecompositionReport report;
  bool timed_out = false;
};

/// Draws one outcome qubit by qubit from exact marginals. Deterministic in the seed.
SampleResult sample(const Circuit& c, std::uint64_t seed, const SimConfig& cfg = {});

}  // namespace zxsim
