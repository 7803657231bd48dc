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

#include "zxsim/simulate.hpp"

#include <string>

#include "zxsim/benchgen.hpp"
#include "zxsim/errors.hpp"

namespace zxsim {

namespace {

constexpr double kEps = 1e-9;

std::vector<BasisState> states(const std::vector<int>& bits) {
  std::vector<BasisState> s;
  for (int b : bits) s.push_back(b ? BasisState::One : BasisState::Zero);
  return s;
}

double real(const Scalar& s) { return s.to_complex().real(); }

}  // namespace

Decomposition amplitude(const Circuit& c, const std::vector<int>& in_bits, const std::vector<int>& out_bits,
                        const SimConfig& cfg) {
  if (in_bits.size() != c.n_qubits || out_bits.size() != c.n_qubits) {
    throw ConstructionError("amplitude: expected " + std::to_string(c.n_qubits) + " bits");
  }
  Diagram d = to_zx(c, cfg.ccz_mode);
  plug_inputs(d, states(in_bits));
  plug_outputs(d, states(out_bits));
  return decompose(std::move(d), cfg.decompose);
}

Decomposition marginal(const Circuit& c, const std::map<std::size_t, int>& fixed, const SimConfig& cfg) {
  for (const auto& [q, b] : fixed) {
    if (q >= c.n_qubits) throw ConstructionError("marginal: qubit " + std::to_string(q) + " out of range");
  }
  Diagram d = to_zx(c, cfg.ccz_mode);
  plug_inputs(d, std::vector<BasisState>(c.n_qubits, BasisState::Zero));
  return decompose(double_diagram(d, fixed), cfg.decompose);
}

SampleResult sample(const Circuit& c, std::uint64_t seed, const SimConfig& cfg) {
  SampleResult res;
  res.probability = Scalar::one();
  Prng rng(seed);
  std::map<std::size_t, int> fixed;
  auto run = [&](const std::map<std::size_t, int>& f, Scalar& out) {
    const Decomposition m = marginal(c, f, cfg);
    res.report.merge(m.report);
    if (m.report.timed_out) {
      res.timed_out = true;
      return false;
    }
    if (!m.value.as_real()) throw InconsistencyError("marginal is not real: " + m.value.to_string());
    out = m.value;
    return true;
  };

  if (cfg.deterministic) {
    for (std::size_t q = 0; q < c.n_qubits; ++q) {
      Scalar p0;
      if (!run({{q, 0}}, p0)) return res;
      if (p0 != Scalar::one() && !p0.is_zero()) {
        throw InconsistencyError("circuit is not deterministic on qubit " + std::to_string(q));
      }
      res.bits.push_back(p0.is_zero() ? 1 : 0);
      res.conditionals.push_back(1.0);
    }
    return res;
  }

  for (std::size_t q = 0; q < c.n_qubits; ++q) {
    fixed[q] = 0;
    Scalar joint0;
    if (!run(fixed, joint0)) return res;
    const Scalar joint1 = res.probability - joint0;
    if (cfg.check_completeness) {
      fixed[q] = 1;
      Scalar direct;
      if (!run(fixed, direct)) return res;
      if (direct != joint1) throw InconsistencyError("P(prefix,0) + P(prefix,1) != P(prefix) at qubit " + std::to_string(q));
    }
    const double p0 = real(joint0) / real(res.probability);
    if (!(p0 >= -kEps && p0 <= 1 + kEps)) {
      throw InconsistencyError("conditional probability " + std::to_string(p0) + " at qubit " + std::to_string(q));
    }
    // Exact zeros decide the branch so rounding never picks an impossible outcome.
    int bit;
    if (joint0.is_zero()) {
      bit = 1;
    } else if (joint1.is_zero()) {
      bit = 0;
    } else {
      bit = rng.unit() < p0 ? 0 : 1;
    }
    fixed[q] = bit;
    res.bits.push_back(bit);
    res.conditionals.push_back(bit == 0 ? p0 : 1 - p0);
    res.probability = bit == 0 ? joint0 : joint1;
  }
  return res;
}

}  // namespace zxsim
