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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rule_harness.hpp"
#include "test_util.hpp"
#include "zxsim/benchgen.hpp"
#include "zxsim/decompose.hpp"
#include "zxsim/dense.hpp"
#include "zxsim/report.hpp"
#include "zxsim/simplify.hpp"
#include "zxsim/simulate.hpp"
#include "zxsim/tensor.hpp"

namespace zxsim {
namespace {

using cd = std::complex<double>;
using Clock = std::chrono::steady_clock;
using testing::uniform;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::size_t hw_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Appends to the detail line and records failure when `ok` is false.
void check(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::size_t index_of(const std::vector<int>& bits) {
  std::size_t x = 0;
  for (int b : bits) x = (x << 1) | static_cast<std::size_t>(b);
  return x;
}

// 1. The seven BSS terms against |T>^6, in floats and exactly per basis entry.
Outcome bss_certification() {
  Outcome o;
  Diagram d;
  std::vector<VertexId> leaves;
  for (int i = 0; i < 6; ++i) {
    const VertexId v = d.add_vertex(VertexKind::Z, Phase(1));
    d.add_edge(v, d.add_output(), EdgeKind::Simple);
    leaves.push_back(v);
  }
  d.scalar() = Scalar::one_over_sqrt2_power(6);
  check(o, terms_certified(), "term tables not certified");
  const auto terms = apply_bss(d, leaves);
  check(o, terms.size() == 7, "expected 7 terms");

  std::vector<cd> sum(64, 0.0);
  for (const Diagram& t : terms) {
    const auto v = tensor(t);
    for (std::size_t i = 0; i < 64; ++i) sum[i] += v[i];
  }
  const cd w = std::polar(1.0, std::numbers::pi / 4);
  double worst = 0;
  int exact_bad = 0;
  for (std::size_t x = 0; x < 64; ++x) {
    worst = std::max(worst, std::abs(sum[x] - std::pow(w, std::popcount(x)) / 8.0));
    std::vector<BasisState> eff;
    for (int q = 5; q >= 0; --q) eff.push_back(((x >> q) & 1U) ? BasisState::One : BasisState::Zero);
    Scalar total;
    for (const Diagram& t : terms) {
      Diagram e = t;
      plug_outputs(e, eff);
      full_simp(e);
      if (e.num_spiders() != 0) ++exact_bad;
      total += e.scalar();
    }
    // Outputs are indexed qubit 0 first; popcount is order independent.
    if (total != Scalar::from_phase(std::popcount(x)) * Scalar::one_over_sqrt2_power(6)) ++exact_bad;
  }
  check(o, worst < 1e-12, "float diff " + fmt("%.3g", worst));
  check(o, exact_bad == 0, std::to_string(exact_bad) + " inexact entries");
  o.detail += (o.detail.empty() ? "" : "; ") + std::string("max diff ") + fmt("%.2g", worst) + ", 64/64 exact";
  return o;
}

// 2. Amplitudes and single-qubit marginals against the dense simulator.
Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(2026);
  double worst = 0;
  std::size_t checks = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 8);
    const Circuit c = testing::random_circuit(rng, n, uniform(rng, 10, 70), 16);
    std::vector<int> in(n), out(n);
    for (std::size_t q = 0; q < n; ++q) {
      in[q] = uniform(rng, 0, 1);
      out[q] = uniform(rng, 0, 1);
    }
    const auto psi = dense::simulate(c, index_of(in));
    worst = std::max(worst, std::abs(amplitude(c, in, out).value.to_complex() - psi[index_of(out)]));
    ++checks;
    // Marginals start from |0...0>.
    const auto psi0 = dense::simulate(c);
    for (std::size_t q = 0; q < n; ++q) {
      double p0 = 0;
      for (std::size_t x = 0; x < psi0.size(); ++x) {
        if (((x >> (n - 1 - q)) & 1U) == 0) p0 += std::norm(psi0[x]);
      }
      worst = std::max(worst, std::abs(marginal(c, {{q, 0}}).value.to_complex() - p0));
      ++checks;
    }
  }
  check(o, worst < 1e-9, "max diff " + fmt("%.3g", worst));
  if (o.pass) o.detail = std::to_string(checks) + " values, max diff " + fmt("%.2g", worst);
  return o;
}

// 3. Every rewrite rule, 2000 applications each.
Outcome rule_soundness() {
  Outcome o;
  std::ostringstream summary;
  for (const auto& rc : testing::rule_cases()) {
    const auto r = testing::run_soundness(rc, 2000);
    check(o, r.applied >= 2000, rc.name + " applied " + std::to_string(r.applied));
    check(o, r.max_spiders <= 9, rc.name + " used " + std::to_string(r.max_spiders) + " spiders");
    check(o, r.worst < 1e-9, rc.name + " diff " + fmt("%.3g", r.worst));
  }
  if (o.pass) o.detail = std::to_string(testing::rule_cases().size()) + " rules x 2000";
  return o;
}

// 4. Large Clifford circuits close to a bare scalar.
Outcome clifford_fast_path() {
  Outcome o;
  std::mt19937_64 rng(404);
  double slowest = 0;
  for (int i = 0; i < 100; ++i) {
    const Circuit c = testing::random_circuit(rng, 50, uniform(rng, 200, 400), 0);
    const auto start = Clock::now();
    Diagram d = to_zx(c, CczMode::SevenT);
    plug_inputs(d, std::vector<BasisState>(50, BasisState::Zero));
    plug_outputs(d, std::vector<BasisState>(50, BasisState::Zero));
    full_simp(d);
    const std::size_t left = d.num_spiders();
    const Decomposition amp = amplitude(c, std::vector<int>(50, 0), std::vector<int>(50, 0));
    const double secs = seconds_since(start);
    slowest = std::max(slowest, secs);
    check(o, c.gates.size() >= 200, "circuit too small");
    check(o, left == 0, "circuit " + std::to_string(i) + ": " + std::to_string(left) + " spiders left");
    check(o, amp.report.leaf_terms == 1, "circuit " + std::to_string(i) + ": leaf_terms " +
                                             std::to_string(amp.report.leaf_terms));
    check(o, secs < 1.0, "circuit " + std::to_string(i) + " took " + fmt("%.2fs", secs));
  }
  if (o.pass) o.detail = "100 circuits, slowest " + fmt("%.3fs", slowest);
  return o;
}

// 5. <+++|CCZ CCZ|+++> needs no decomposition.
Outcome ccz_pair() {
  Outcome o;
  Circuit c(3);
  c.add(GateKind::CCZ, {0, 1, 2}).add(GateKind::CCZ, {0, 1, 2});
  Diagram d = to_zx(c, CczMode::SevenT);
  plug_inputs(d, std::vector<BasisState>(3, BasisState::Plus));
  plug_outputs(d, std::vector<BasisState>(3, BasisState::Plus));
  const std::size_t before = d.t_count();
  full_simp(d);
  check(o, before == 14, "expected 14 T spiders before simplification");
  check(o, d.t_count() == 0, "T-count " + std::to_string(d.t_count()));
  const Decomposition r = decompose(d, {});
  check(o, r.report.leaf_terms == 1, "leaf_terms " + std::to_string(r.report.leaf_terms));
  check(o, r.value == Scalar::one(), "value " + render_exact(r.value));
  if (o.pass) o.detail = "T-count 14 -> 0, one leaf";
  return o;
}

struct Row {
  bool hidden_shift;
  std::size_t ccz;
  DecompositionReport report;
  bool timed_out;
};

SimConfig bench_config(bool deterministic) {
  SimConfig cfg;
  cfg.deterministic = deterministic;
  cfg.decompose.threads = hw_threads();
  return cfg;
}

RunRecord timed_sample(const Circuit& c, std::uint64_t seed, SimConfig cfg) {
  cfg.decompose.deadline = Clock::now() + std::chrono::seconds(300);
  return record_sample(c, seed, cfg);
}

// 6. 50-qubit Pauli exponentials at T-count 30.
Outcome pauli_scale(std::vector<Row>& rows) {
  Outcome o;
  int ok = 0;
  double slowest = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Circuit c = gen_pauli_exp({50, 30, 2, 4, seed});
    const RunRecord r = timed_sample(c, seed, bench_config(false));
    rows.push_back({false, 0, r.report, r.timed_out});
    slowest = std::max(slowest, r.report.wall_time_ms / 1000);
    const bool good = !r.timed_out && r.bits.size() == 50 && r.value && !r.value->is_zero();
    ok += good ? 1 : 0;
  }
  check(o, ok >= 19, std::to_string(ok) + "/20 completed");
  if (o.pass) o.detail = std::to_string(ok) + "/20 sampled, slowest " + fmt("%.2fs", slowest);
  return o;
}

// 7. 50-qubit hidden shift with 10 CCZ, plus the leaf/naive comparison over all rows.
Outcome hidden_shift_scale(std::vector<Row>& rows) {
  Outcome o;
  int ok = 0;
  double slowest = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const HiddenShift hs = gen_hidden_shift({50, 10, 1.0, 0.5, seed});
    const RunRecord r = timed_sample(hs.circuit, seed, bench_config(true));
    rows.push_back({true, 10, r.report, r.timed_out});
    slowest = std::max(slowest, r.report.wall_time_ms / 1000);
    const bool good = !r.timed_out && r.bits == bit_string(hs.shift) && r.value && *r.value == Scalar::one();
    ok += good ? 1 : 0;
  }
  check(o, ok >= 19, std::to_string(ok) + "/20 recovered the shift with probability 1");

  int hs_rows = 0, hs_strict = 0, over = 0;
  for (const Row& row : rows) {
    if (row.timed_out) continue;
    const BigInt leaves(row.report.leaf_terms);
    if (leaves > row.report.naive_terms) ++over;
    if (row.hidden_shift && row.ccz >= 10) {
      ++hs_rows;
      hs_strict += leaves < row.report.naive_terms ? 1 : 0;
    }
  }
  check(o, over == 0, std::to_string(over) + " rows with leaf_terms > naive_terms");
  check(o, hs_rows > 0 && 10 * hs_strict >= 9 * hs_rows,
        std::to_string(hs_strict) + "/" + std::to_string(hs_rows) + " rows strictly below naive");
  if (o.pass) {
    o.detail = std::to_string(ok) + "/20 exact, " + std::to_string(hs_strict) + "/" + std::to_string(hs_rows) +
               " below naive, slowest " + fmt("%.2fs", slowest);
  }
  return o;
}

// 8. Probabilities are real ring elements and single-qubit marginals sum to one exactly.
Outcome exact_form() {
  Outcome o;
  std::mt19937_64 rng(808);
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 6);
    const Circuit c = testing::random_circuit(rng, n, 40, 12);
    for (std::size_t q = 0; q < n; ++q) {
      const Scalar p0 = marginal(c, {{q, 0}}).value, p1 = marginal(c, {{q, 1}}).value;
      if (!p0.as_real() || !p1.as_real() || p0 + p1 != Scalar::one()) ++bad;
    }
    const SampleResult s = sample(c, static_cast<std::uint64_t>(i));
    if (!s.probability.as_real()) ++bad;
  }
  check(o, bad == 0, std::to_string(bad) + " violations");
  if (o.pass) o.detail = "100 circuits";
  return o;
}

// 9. RunRecords do not depend on the worker count.
Outcome determinism() {
  Outcome o;
  const std::size_t many = std::max<std::size_t>(4, hw_threads());
  int compared = 0;
  auto compare = [&](const Circuit& c, std::uint64_t seed, bool det, const std::string& label) {
    SimConfig a = bench_config(det), b = a;
    a.decompose.threads = 1;
    b.decompose.threads = many;
    const std::string ra = to_json(record_sample(c, seed, a), false).dump();
    const std::string rb = to_json(record_sample(c, seed, b), false).dump();
    check(o, ra == rb, label + " differs");
    ++compared;
  };
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    compare(gen_pauli_exp({50, 30, 2, 4, seed}), seed, false, "pauli seed " + std::to_string(seed));
    compare(gen_pauli_exp({10, 14, 2, 4, seed}), seed, false, "10-qubit pauli seed " + std::to_string(seed));
    compare(gen_hidden_shift({50, 10, 1.0, 0.5, seed}).circuit, seed, true, "hidden shift seed " + std::to_string(seed));
  }
  if (o.pass) o.detail = std::to_string(compared) + " records, 1 vs " + std::to_string(many) + " threads";
  return o;
}

}  // namespace
}  // namespace zxsim

int main() {
  using namespace zxsim;
  std::vector<Row> rows;
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0: no wall-clock limit beyond the per-item ones
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "bss-certification", 1.0, bss_certification},
      {2, "oracle-equivalence", 120.0, oracle_equivalence},
      {3, "rewrite-soundness", 300.0, rule_soundness},
      {4, "clifford-fast-path", 0, clifford_fast_path},
      {5, "ccz-pair-cancellation", 0, ccz_pair},
      {6, "pauli-exp-50q-t30", 0, [&] { return pauli_scale(rows); }},
      {7, "hidden-shift-50q-ccz10", 0, [&] { return hidden_shift_scale(rows); }},
      {8, "exact-form", 0, exact_form},
      {9, "thread-determinism", 0, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = seconds_since(start);
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.pass = false;
      o.detail += "; exceeded " + fmt("%.0fs", c.limit_s);
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %d %s (%.2fs) %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
