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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "test_util.hpp"
#include "zxsim/benchgen.hpp"
#include "zxsim/circuit.hpp"
#include "zxsim/decompose.hpp"
#include "zxsim/dense.hpp"
#include "zxsim/errors.hpp"
#include "zxsim/simplify.hpp"
#include "zxsim/tensor.hpp"

namespace zxsim {
namespace {

using cd = std::complex<double>;
using testing::uniform;

// n disconnected pi/4 spiders on outputs, scaled to |T>^n.
Diagram bare_t_states(std::size_t n, std::vector<VertexId>* leaves) {
  Diagram d;
  for (std::size_t i = 0; i < n; ++i) {
    const VertexId v = d.add_vertex(VertexKind::Z, Phase(1));
    d.add_edge(v, d.add_output(), EdgeKind::Simple);
    leaves->push_back(v);
  }
  d.scalar() = Scalar::one_over_sqrt2_power(static_cast<long>(n));
  return d;
}

std::vector<cd> t_power(std::size_t n) {
  const cd w = std::polar(1.0, std::numbers::pi / 4);
  std::vector<cd> v(std::size_t{1} << n);
  for (std::size_t x = 0; x < v.size(); ++x) {
    v[x] = std::pow(w, std::popcount(x)) / std::pow(std::numbers::sqrt2, static_cast<double>(n));
  }
  return v;
}

std::vector<cd> sum_of(const std::vector<Diagram>& ds, const TensorLimits& lim = {}) {
  std::vector<cd> total;
  for (const Diagram& d : ds) {
    const auto t = tensor(d, lim);
    if (total.empty()) total.assign(t.size(), 0.0);
    for (std::size_t i = 0; i < t.size(); ++i) total[i] += t[i];
  }
  return total;
}

// Random host with `leaves` pi/4 leaves hanging off it.
Diagram host_with_leaves(std::mt19937_64& rng, int spiders, std::size_t leaves, std::vector<VertexId>* out) {
  Diagram d;
  std::vector<VertexId> sp;
  for (int i = 0; i < spiders; ++i) sp.push_back(d.add_vertex(VertexKind::Z, Phase(uniform(rng, 0, 7))));
  for (int i = 0; i < spiders; ++i) {
    for (int j = i + 1; j < spiders; ++j) {
      if (uniform(rng, 0, 2) == 0) d.add_edge(sp[i], sp[j], uniform(rng, 0, 1) ? EdgeKind::Hadamard : EdgeKind::Simple);
    }
  }
  d.add_edge(sp[0], d.add_input(), EdgeKind::Simple);
  d.add_edge(sp[static_cast<std::size_t>(spiders - 1)], d.add_output(), EdgeKind::Hadamard);
  for (std::size_t i = 0; i < leaves; ++i) {
    const VertexId l = d.add_vertex(VertexKind::Z, Phase(1));
    d.add_edge(l, sp[static_cast<std::size_t>(uniform(rng, 0, spiders - 1))],
               uniform(rng, 0, 1) ? EdgeKind::Hadamard : EdgeKind::Simple);
    out->push_back(l);
  }
  d.scalar() = testing::random_scalar(rng, 3);
  if (d.scalar().is_zero()) d.scalar() = Scalar::one();
  return d;
}

Diagram closed(const Circuit& c, const std::vector<BasisState>& in, const std::vector<BasisState>& out,
               CczMode mode = CczMode::SevenT) {
  Diagram d = to_zx(c, mode);
  plug_inputs(d, in);
  plug_outputs(d, out);
  return d;
}

std::vector<BasisState> bits_of(std::size_t x, std::size_t n) {
  std::vector<BasisState> s;
  for (std::size_t q = 0; q < n; ++q) s.push_back(((x >> (n - 1 - q)) & 1U) ? BasisState::One : BasisState::Zero);
  return s;
}

// Reference evaluator: one T at a time, two branches each.
Scalar exhaustive(Diagram d) {
  full_simp(d);
  if (d.scalar().is_zero()) return Scalar::zero();
  std::vector<VertexId> odd;
  for (VertexId v : d.vertex_ids()) {
    if (d.phase(v).is_t_like()) odd.push_back(v);
  }
  if (odd.empty()) return d.scalar();
  const VertexId leaf = unfuse_t(d, odd.front());
  Scalar total;
  for (Diagram& c : apply_single(d, leaf)) total += exhaustive(std::move(c));
  return total;
}

// Worst case of the branching: 7 per group of six, 2^2 for the tail.
BigInt naive_terms_bound(std::size_t t) { return naive_terms(t) * 4; }

TEST(Unfuse, Examples) {
  Diagram d;
  const VertexId a = d.add_vertex(VertexKind::Z, Phase(1));
  const VertexId b = d.add_vertex(VertexKind::Z, Phase(3));
  const VertexId c = d.add_vertex(VertexKind::Z, Phase(2));
  d.add_edge(a, b, EdgeKind::Hadamard);
  d.add_edge(b, c, EdgeKind::Hadamard);
  d.add_edge(c, d.add_output(), EdgeKind::Simple);
  const auto before = tensor(d);
  const VertexId la = unfuse_t(d, a);
  EXPECT_EQ(d.phase(a), Phase(0));
  EXPECT_EQ(d.phase(la), Phase(1));
  EXPECT_EQ(d.degree(la), 1u);
  const VertexId lb = unfuse_t(d, b);
  EXPECT_EQ(d.phase(b), Phase(2));
  EXPECT_EQ(d.phase(lb), Phase(1));
  EXPECT_LT(testing::max_diff(before, tensor(d)), 1e-12);
  EXPECT_THROW(unfuse_t(d, c), RuleNotApplicable);
}

TEST(Terms, CertifiedExactly) { EXPECT_TRUE(terms_certified()); }

TEST(Bss, SumsToSixTStates) {
  std::vector<VertexId> leaves;
  const Diagram d = bare_t_states(6, &leaves);
  const auto terms = apply_bss(d, leaves);
  ASSERT_EQ(terms.size(), 7u);
  EXPECT_LT(testing::max_diff(sum_of(terms), t_power(6)), 1e-12);
  for (const Diagram& t : terms) EXPECT_EQ(t.t_count(), 0u);
}

TEST(Bss, AdditiveOnRandomHosts) {
  std::mt19937_64 rng(21);
  const TensorLimits lim{20, 10};
  for (int i = 0; i < 40; ++i) {
    std::vector<VertexId> leaves;
    const Diagram d = host_with_leaves(rng, 8, 6, &leaves);
    EXPECT_LT(testing::scaled_diff(tensor(d, lim), sum_of(apply_bss(d, leaves), lim)), 1e-9);
  }
}

TEST(Bss, RejectsBadLeaves) {
  std::vector<VertexId> leaves;
  Diagram d = bare_t_states(6, &leaves);
  EXPECT_THROW(apply_bss(d, {leaves.begin(), leaves.begin() + 5}), RuleNotApplicable);
  std::vector<VertexId> dup = leaves;
  dup[5] = dup[4];
  EXPECT_THROW(apply_bss(d, dup), RuleNotApplicable);
  d.set_phase(leaves[2], Phase(3));
  EXPECT_THROW(apply_bss(d, leaves), RuleNotApplicable);
}

TEST(Pairwise, MatchesTwoTStates) {
  std::vector<VertexId> leaves;
  const Diagram d = bare_t_states(2, &leaves);
  const auto terms = apply_pairwise(d, leaves);
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_LT(testing::max_diff(sum_of(terms), t_power(2)), 1e-12);
  // 1/2 (|00> + i|11>) and 1/2 w (|01> + |10>).
  const cd w = std::polar(1.0, std::numbers::pi / 4);
  EXPECT_LT(testing::max_diff(tensor(terms[0]), {0.5, 0.0, 0.0, cd(0, 0.5)}), 1e-12);
  EXPECT_LT(testing::max_diff(tensor(terms[1]), {0.0, 0.5 * w, 0.5 * w, 0.0}), 1e-12);
}

TEST(Single, MatchesOneTState) {
  std::vector<VertexId> leaves;
  const Diagram d = bare_t_states(1, &leaves);
  const auto terms = apply_single(d, leaves[0]);
  ASSERT_EQ(terms.size(), 2u);
  const double r = 1 / std::numbers::sqrt2;
  EXPECT_LT(testing::max_diff(tensor(terms[0]), {r, 0.0}), 1e-12);
  EXPECT_LT(testing::max_diff(tensor(terms[1]), {0.0, r * std::polar(1.0, std::numbers::pi / 4)}), 1e-12);
}

TEST(PairwiseAndSingle, AdditiveOnRandomHosts) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    std::vector<VertexId> leaves;
    const Diagram d = host_with_leaves(rng, 6, 2, &leaves);
    const auto ref = tensor(d);
    EXPECT_LT(testing::scaled_diff(ref, sum_of(apply_pairwise(d, leaves))), 1e-9);
    EXPECT_LT(testing::scaled_diff(ref, sum_of(apply_single(d, leaves[1]))), 1e-9);
  }
}

TEST(SelectTargets, Policy) {
  Diagram d;
  d.add_vertex(VertexKind::Z, Phase(2));
  for (int i = 0; i < 8; ++i) d.add_vertex(VertexKind::Z, Phase(1));
  EXPECT_EQ(select_targets(d), (std::vector<VertexId>{1, 2, 3, 4, 5, 6}));
  d.remove_vertex(7);
  d.remove_vertex(8);
  EXPECT_EQ(select_targets(d).size(), 6u);
  d.remove_vertex(6);
  EXPECT_THROW(select_targets(d), RuleNotApplicable);

  // Gadget tops come after ordinary odd spiders.
  Diagram g;
  const VertexId base = g.add_vertex(VertexKind::Z);
  const VertexId top = g.add_vertex(VertexKind::Z, Phase(1));
  g.add_edge(base, top, EdgeKind::Hadamard);
  const VertexId hub = g.add_vertex(VertexKind::Z, Phase(2));
  std::vector<VertexId> odd;
  for (int i = 0; i < 6; ++i) {
    odd.push_back(g.add_vertex(VertexKind::Z, Phase(3)));
    g.add_edge(base, odd.back(), EdgeKind::Hadamard);
    g.add_edge(hub, odd.back(), EdgeKind::Hadamard);
  }
  EXPECT_EQ(select_targets(g), odd);
  EXPECT_EQ(lowest_id_targets(g, 7).back(), top);
}

TEST(Decompose, CliffordIsOneLeaf) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 5);
    const Circuit c = testing::random_circuit(rng, n, 30, 0);
    Diagram d = closed(c, bits_of(0, n), bits_of(static_cast<std::size_t>(uniform(rng, 0, (1 << n) - 1)), n));
    Diagram e = d;
    full_simp(e);
    const Decomposition r = decompose(d);
    EXPECT_EQ(r.report.leaf_terms, 1u);
    EXPECT_EQ(r.value, e.scalar());
  }
}

TEST(Decompose, ThreeTChain) {
  // <0| T H T H T H |0>, i.e. <0| T H T H T |+>.
  Circuit c(1);
  c.add(GateKind::H, {0}).add(GateKind::T, {0}).add(GateKind::H, {0}).add(GateKind::T, {0});
  c.add(GateKind::H, {0}).add(GateKind::T, {0});
  const Decomposition r = decompose(closed(c, bits_of(0, 1), bits_of(0, 1)));
  EXPECT_LT(std::abs(r.value.to_complex() - dense::simulate(c)[0]), 1e-12);
  EXPECT_EQ(r.report.naive_terms, 7);
}

TEST(Decompose, MatchesDenseAndExhaustive) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 120; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 8);
    const Circuit c = testing::random_circuit(rng, n, 60, 16);
    const std::size_t out = static_cast<std::size_t>(uniform(rng, 0, (1 << n) - 1));
    const CczMode mode = i % 2 ? CczMode::FourT : CczMode::SevenT;
    const Diagram d = closed(c, bits_of(0, n), bits_of(out, n), mode);
    const Decomposition r = decompose(d);
    EXPECT_LT(std::abs(r.value.to_complex() - dense::simulate(c)[out]), 1e-9) << emit_qasm(c);
    if (i % 4 == 0) EXPECT_EQ(r.value, exhaustive(d));
    const std::size_t t = r.report.initial_t;
    EXPECT_LE(BigInt(r.report.leaf_terms), naive_terms_bound(t));
    std::uint64_t cap = 1;
    for (std::size_t k = 0; k < 3; ++k) cap *= 7;
    EXPECT_LE(r.report.max_live_diagrams, cap * std::max<std::size_t>(1, (t + 5) / 6));
  }
}

TEST(Decompose, ScheduleIndependent) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 25; ++i) {
    const std::size_t n = 3 + static_cast<std::size_t>(i % 4);
    const Circuit c = testing::random_circuit(rng, n, 80, 24);
    const Diagram d = closed(c, bits_of(0, n), bits_of(1, n));
    DecomposeConfig one;
    const Decomposition a = decompose(d, one);
    for (std::size_t depth : {0, 1, 2, 3}) {
      DecomposeConfig many;
      many.threads = 4;
      many.parallel_depth = depth;
      const Decomposition b = decompose(d, many);
      EXPECT_EQ(a.value, b.value);
      EXPECT_EQ(a.report.leaf_terms, b.report.leaf_terms);
      EXPECT_EQ(a.report.t_histogram, b.report.t_histogram);
      if (depth == 3) EXPECT_EQ(a.report.max_live_diagrams, b.report.max_live_diagrams);
    }
  }
}

TEST(Decompose, BranchesAddUp) {
  std::mt19937_64 rng(26);
  int audited = 0;
  while (audited < 20) {
    const Circuit c = testing::random_circuit(rng, 4, 60, 16);
    Diagram d = closed(c, bits_of(0, 4), bits_of(0, 4));
    full_simp(d);
    if (d.t_count() < 6) continue;
    auto targets = select_targets(d);
    for (VertexId& v : targets) v = unfuse_t(d, v);
    Scalar sum;
    for (Diagram& child : apply_bss(d, targets)) sum += decompose(std::move(child)).value;
    EXPECT_EQ(sum, decompose(d).value);
    ++audited;
  }
}

TEST(Decompose, Timeout) {
  std::mt19937_64 rng(27);
  const Circuit c = testing::random_circuit(rng, 4, 60, 16);
  DecomposeConfig cfg;
  cfg.deadline = std::chrono::steady_clock::now();
  EXPECT_TRUE(decompose(closed(c, bits_of(0, 4), bits_of(0, 4)), cfg).report.timed_out);
}

TEST(Decompose, RejectsOpenDiagrams) {
  Diagram d;
  d.add_edge(d.add_input(), d.add_output(), EdgeKind::Simple);
  EXPECT_THROW(decompose(d), ConstructionError);
}

}  // namespace
}  // namespace zxsim
