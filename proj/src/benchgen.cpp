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

#include "zxsim/benchgen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "zxsim/dense.hpp"
#include "zxsim/errors.hpp"

namespace zxsim {

std::uint64_t Prng::below(std::uint64_t n) {
  if (n == 0) throw ConstructionError("Prng::below(0)");
  // Reject the top (2^64 mod n) values so every residue is equally likely.
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % n;
  }
}

double Prng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

namespace {

// First k entries of a Fisher-Yates shuffle of 0..n-1.
std::vector<std::size_t> choose(Prng& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

void to_z_basis(Circuit& c, std::size_t q, char p) {
  if (p == 'X') c.add(GateKind::H, {q});
  if (p == 'Y') c.add(GateKind::Sdg, {q}).add(GateKind::H, {q});
  if (p != 'X' && p != 'Y' && p != 'Z') throw ConstructionError(std::string("unknown Pauli '") + p + "'");
}

void from_z_basis(Circuit& c, std::size_t q, char p) {
  if (p == 'X') c.add(GateKind::H, {q});
  if (p == 'Y') c.add(GateKind::H, {q}).add(GateKind::S, {q});
}

struct Oracle {
  std::vector<std::array<std::size_t, 3>> ccz;
  std::vector<std::array<std::size_t, 2>> cz;
  std::vector<std::size_t> z;
};

// g on qubits offset..offset+m-1; f adds the inner product of the halves.
void emit_oracle(Circuit& c, const Oracle& g, std::size_t m, std::size_t offset) {
  for (std::size_t i = 0; i < m; ++i) c.add(GateKind::CZ, {i, m + i});
  for (const auto& t : g.ccz) c.add(GateKind::CCZ, {offset + t[0], offset + t[1], offset + t[2]});
  for (const auto& p : g.cz) c.add(GateKind::CZ, {offset + p[0], offset + p[1]});
  for (std::size_t q : g.z) c.add(GateKind::Z, {offset + q});
}

void all_h(Circuit& c) {
  for (std::size_t q = 0; q < c.n_qubits; ++q) c.add(GateKind::H, {q});
}

}  // namespace

std::vector<PauliExp> draw_pauli_exps(const PauliExpSpec& spec) {
  if (spec.w_min < 2 || spec.w_min > spec.w_max || spec.w_max > spec.n_qubits) {
    throw ConstructionError("gen_pauli_exp: need 2 <= w_min <= w_max <= n_qubits");
  }
  Prng rng(spec.seed);
  static constexpr int kAngles[] = {1, 3, 5, 7};
  std::vector<PauliExp> out;
  for (std::size_t e = 0; e < spec.count; ++e) {
    PauliExp p;
    const std::size_t k = spec.w_min + static_cast<std::size_t>(rng.below(spec.w_max - spec.w_min + 1));
    p.qubits = choose(rng, spec.n_qubits, k);
    for (std::size_t i = 0; i < k; ++i) p.paulis.push_back("XYZ"[rng.below(3)]);
    p.alpha = kAngles[rng.below(4)];
    out.push_back(std::move(p));
  }
  return out;
}

Circuit synthesize(std::size_t n_qubits, const std::vector<PauliExp>& exps) {
  Circuit c(n_qubits);
  for (const PauliExp& p : exps) {
    const std::size_t k = p.qubits.size();
    if (k == 0 || p.paulis.size() != k) throw ConstructionError("synthesize: malformed exponential");
    const auto& qs = p.qubits;
    for (std::size_t i = 0; i < k; ++i) to_z_basis(c, qs[i], p.paulis[i]);
    for (std::size_t i = 0; i + 1 < k; ++i) c.add(GateKind::CNOT, {qs[i], qs[i + 1]});
    c.add(GateKind::ZPhase, {qs[k - 1]}, p.alpha);
    for (std::size_t i = k - 1; i-- > 0;) c.add(GateKind::CNOT, {qs[i], qs[i + 1]});
    for (std::size_t i = 0; i < k; ++i) from_z_basis(c, qs[i], p.paulis[i]);
  }
  return c;
}

Circuit gen_pauli_exp(const PauliExpSpec& spec) { return synthesize(spec.n_qubits, draw_pauli_exps(spec)); }

HiddenShift gen_hidden_shift(const HiddenShiftSpec& spec) {
  const std::size_t n = spec.n_qubits;
  if (n == 0 || n % 2 != 0) throw ConstructionError("gen_hidden_shift: n_qubits must be even and positive");
  if (spec.n_ccz % 2 != 0) throw ConstructionError("gen_hidden_shift: n_ccz must be even (half in each oracle)");
  const std::size_t m = n / 2;
  if (spec.n_ccz > 0 && m < 3) throw ConstructionError("gen_hidden_shift: CCZ gates need at least 6 qubits");
  if (spec.cz_density < 0 || spec.z_density < 0 || spec.z_density > 1) {
    throw ConstructionError("gen_hidden_shift: bad density");
  }
  Prng rng(spec.seed);
  HiddenShift hs{Circuit(n), std::vector<int>(n)};
  for (int& b : hs.shift) b = static_cast<int>(rng.below(2));

  Oracle g;
  for (std::size_t i = 0; i < spec.n_ccz / 2; ++i) {
    const auto t = choose(rng, m, 3);
    g.ccz.push_back({t[0], t[1], t[2]});
  }
  const auto n_cz = m >= 2 ? static_cast<std::size_t>(std::llround(spec.cz_density * static_cast<double>(m))) : 0;
  for (std::size_t i = 0; i < n_cz; ++i) {
    const auto p = choose(rng, m, 2);
    g.cz.push_back({p[0], p[1]});
  }
  for (std::size_t q = 0; q < m; ++q) {
    if (rng.unit() < spec.z_density) g.z.push_back(q);
  }

  // |0> -H-> O_f(z + s) -H-> O_dual -H-> |s>, with X = HZH for the shift.
  Circuit& c = hs.circuit;
  all_h(c);
  auto flip = [&] {
    for (std::size_t q = 0; q < n; ++q) {
      if (hs.shift[q]) c.add(GateKind::H, {q}).add(GateKind::Z, {q}).add(GateKind::H, {q});
    }
  };
  flip();
  emit_oracle(c, g, m, m);
  flip();
  all_h(c);
  emit_oracle(c, g, m, 0);
  all_h(c);

  if (n <= kSelfTestQubits) {
    std::size_t s = 0;
    for (int b : hs.shift) s = (s << 1) | static_cast<std::size_t>(b);
    if (std::abs(std::norm(dense::simulate(c)[s]) - 1.0) > 1e-9) {
      throw InconsistencyError("gen_hidden_shift: output is not the planted shift");
    }
  }
  return hs;
}

BigInt naive_terms(std::size_t t, bool doubled) {
  if (doubled) t *= 2;
  BigInt r = 1;
  for (std::size_t i = 0; i < (t + 5) / 6; ++i) r *= 7;
  return r;
}

}  // namespace zxsim
