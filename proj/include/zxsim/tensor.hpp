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

#include "zxsim/diagram.hpp"

namespace zxsim {

struct TensorLimits {
  std::size_t max_spiders = 14;
  std::size_t max_boundaries = 10;
};

/**
 * Dense evaluation of a diagram, scalar included. Entry order: index j is
 * bit (rank-1-j) of the flat position, indices are inputs then outputs.
 * So for a state on outputs (q0, q1) entry 1 is <01|psi> with q1 = 1.
 *
 * HBoxes must have arity 2 and denote the normalised Hadamard matrix.
 * Throws OracleRefused above the limits.
 */
std::vector<std::complex<double>> tensor(const Diagram& d, const TensorLimits& limits = {});

/// max_i |x_i - y_i|, or +inf when the sizes differ.
double max_abs_diff(const std::vector<std::complex<double>>& x,
                    const std::vector<std::complex<double>>& y);

}  // namespace zxsim
