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

#include "zxsim/dense.hpp"

#include <cmath>
#include <numbers>

#include "zxsim/errors.hpp"

namespace zxsim::dense {

namespace {

using cd = std::complex<double>;

cd omega(int m) {
  const double a = std::numbers::pi / 4 * m;
  return {std::cos(a), std::sin(a)};
}

std::size_t mask(std::size_t n, std::size_t q) { return std::size_t{1} << (n - 1 - q); }

void one_qubit(Vec& s, std::size_t n, std::size_t q, cd m00, cd m01, cd m10, cd m11) {
  const std::size_t b = mask(n, q);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i & b) continue;
    const cd x0 = s[i], x1 = s[i | b];
    s[i] = m00 * x0 + m01 * x1;
    s[i | b] = m10 * x0 + m11 * x1;
  }
}

void phase(Vec& s, std::size_t n, std::size_t q, int m) {
  const cd w = omega(m);
  const std::size_t b = mask(n, q);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i & b) s[i] *= w;
  }
}

void hadamard(Vec& s, std::size_t n, std::size_t q) {
  const double h = 1.0 / std::numbers::sqrt2;
  one_qubit(s, n, q, h, h, h, -h);
}

}  // namespace

Vec basis_state(std::size_t n, std::size_t index) {
  if (n > kMaxQubits) throw Error("dense simulation limited to " + std::to_string(kMaxQubits) + " qubits");
  Vec s(std::size_t{1} << n);
  s.at(index) = 1.0;
  return s;
}

void apply(Vec& s, std::size_t n, const Gate& g) {
  const auto& q = g.qubits;
  switch (g.kind) {
    case GateKind::H: hadamard(s, n, q[0]); break;
    case GateKind::X: one_qubit(s, n, q[0], 0.0, 1.0, 1.0, 0.0); break;
    case GateKind::Z: phase(s, n, q[0], 4); break;
    case GateKind::S: phase(s, n, q[0], 2); break;
    case GateKind::Sdg: phase(s, n, q[0], 6); break;
    case GateKind::T: phase(s, n, q[0], 1); break;
    case GateKind::Tdg: phase(s, n, q[0], 7); break;
    case GateKind::ZPhase: phase(s, n, q[0], g.m); break;
    case GateKind::XPhase:
      hadamard(s, n, q[0]);
      phase(s, n, q[0], g.m);
      hadamard(s, n, q[0]);
      break;
    case GateKind::CNOT: {
      const std::size_t c = mask(n, q[0]), t = mask(n, q[1]);
      for (std::size_t i = 0; i < s.size(); ++i) {
        if ((i & c) && !(i & t)) std::swap(s[i], s[i | t]);
      }
      break;
    }
    case GateKind::CZ:
    case GateKind::CCZ: {
      std::size_t all = 0;
      for (std::size_t x : q) all |= mask(n, x);
      for (std::size_t i = 0; i < s.size(); ++i) {
        if ((i & all) == all) s[i] = -s[i];
      }
      break;
    }
  }
}

Vec simulate(const Circuit& c, std::size_t in) {
  Vec s = basis_state(c.n_qubits, in);
  for (const Gate& g : c.gates) apply(s, c.n_qubits, g);
  return s;
}

Vec unitary(const Circuit& c) {
  const std::size_t n = c.n_qubits;
  const std::size_t dim = std::size_t{1} << n;
  Vec u(dim * dim);
  for (std::size_t in = 0; in < dim; ++in) {
    const Vec col = simulate(c, in);
    for (std::size_t out = 0; out < dim; ++out) u[(in << n) | out] = col[out];
  }
  return u;
}

double marginal(const Vec& s, std::size_t n, std::size_t q, int bit) {
  double p = 0;
  const std::size_t b = mask(n, q);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (static_cast<bool>(i & b) == static_cast<bool>(bit)) p += std::norm(s[i]);
  }
  return p;
}

}  // namespace zxsim::dense
