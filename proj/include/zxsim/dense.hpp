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

#include <complex>
#include <cstddef>
#include <vector>

#include "zxsim/circuit.hpp"

/// Dense state-vector reference simulation, independent of the ZX pipeline.
/// Qubit 0 is the most significant bit of a basis index.
namespace zxsim::dense {

using Vec = std::vector<std::complex<double>>;

/// Refuses circuits wider than this to keep memory bounded.
inline constexpr std::size_t kMaxQubits = 24;

Vec basis_state(std::size_t n, std::size_t index);
void apply(Vec& state, std::size_t n, const Gate& g);
/// U|in>, with `in` a basis index.
Vec simulate(const Circuit& c, std::size_t in = 0);
/// Full matrix with entry [(in << n) | out] = <out|U|in>, matching the tensor oracle layout.
Vec unitary(const Circuit& c);
/// P(q = bit) for the state.
double marginal(const Vec& state, std::size_t n, std::size_t q, int bit);

}  // namespace zxsim::dense
