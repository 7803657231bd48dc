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

#include "zxsim/decompose.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <set>
#include <string>
#include <thread>

#include "zxsim/benchgen.hpp"
#include "zxsim/errors.hpp"
#include "zxsim/simplify.hpp"

namespace zxsim {

namespace {

// A stabiliser term on n leaves. Vertices 0..n-1 are the leaves themselves,
// n.. are extra spiders; the term's value is coefficient times the diagram.
struct Term {
  std::vector<int> leaf_phases;
  VertexKind leaf_kind = VertexKind::Z;
  std::vector<int> extra_phases;
  struct Edge {
    int a, b;
    EdgeKind kind;
  };
  std::vector<Edge> edges;
  Scalar coefficient;
};

Term central(int leaf_phase, int centre_phase, EdgeKind kind, Scalar coefficient) {
  Term t{std::vector<int>(6, leaf_phase), VertexKind::Z, {centre_phase}, {}, std::move(coefficient)};
  for (int i = 0; i < 6; ++i) t.edges.push_back({i, 6, kind});
  return t;
}

// Five spiders w_i, each joined to leaf perm[i] and to leaf perm[5], plus a pentagram among them.
Term pentagram(const std::array<int, 6>& perm, Scalar coefficient) {
  Term t{std::vector<int>(6, 0), VertexKind::Z, std::vector<int>(5, 0), {}, std::move(coefficient)};
  t.leaf_phases[static_cast<std::size_t>(perm[5])] = 4;
  for (int i = 0; i < 5; ++i) {
    t.edges.push_back({perm[static_cast<std::size_t>(i)], 6 + i, EdgeKind::Hadamard});
    t.edges.push_back({6 + i, perm[5], EdgeKind::Hadamard});
  }
  for (auto [a, b] : {std::pair{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}}) {
    t.edges.push_back({6 + a, 6 + b, EdgeKind::Hadamard});
  }
  return t;
}

const std::vector<Term>& bss_terms() {
  static const std::vector<Term> terms = [] {
    const Scalar s2 = Scalar::sqrt2_power(1);
    const Scalar minus_one_plus_i(0, -1, 0, 1, 0);
    const Scalar two(0, 2, 0, 0, 0);
    const Scalar eighth(3, 1, 0, 0, 0);
    std::vector<Term> t;
    // Product states |+>^6 and |->^6.
    t.push_back({std::vector<int>(6, 0), VertexKind::Z, {}, {}, minus_one_plus_i * (two + s2) * eighth});
    t.push_back({std::vector<int>(6, 4), VertexKind::Z, {}, {}, minus_one_plus_i * (two - s2) * eighth});
    t.push_back(central(2, 4, EdgeKind::Hadamard, Scalar(0, 0, -2, 0, 0)));
    t.push_back(central(2, 0, EdgeKind::Hadamard, Scalar(0, -2, 0, -2, 0)));
    t.push_back(central(0, 6, EdgeKind::Simple, two));
    t.push_back(pentagram({0, 1, 2, 3, 4, 5}, Scalar(0, 8, 0, 8, 0)));
    t.push_back(pentagram({0, 1, 3, 4, 5, 2}, Scalar(0, 8, 0, 8, 0)));
    return t;
  }();
  return terms;
}

const std::vector<Term>& pair_terms() {
  static const std::vector<Term> terms = {
      // |00> + i|11>
      {{0, 0}, VertexKind::Z, {2}, {{0, 2, EdgeKind::Simple}, {1, 2, EdgeKind::Simple}}, Scalar::one()},
      // |01> + |10>
      {{0, 0}, VertexKind::Z, {4}, {{0, 2, EdgeKind::Hadamard}, {1, 2, EdgeKind::Hadamard}}, Scalar::from_phase(1)},
  };
  return terms;
}

const std::vector<Term>& single_terms() {
  // A one-legged X spider of phase 0 or pi is sqrt2 |0> or sqrt2 |1>.
  static const std::vector<Term> terms = {
      {{0}, VertexKind::X, {}, {}, Scalar::one_over_sqrt2_power(1)},
      {{4}, VertexKind::X, {}, {}, Scalar::from_phase(1) * Scalar::one_over_sqrt2_power(1)},
  };
  return terms;
}

// Exact amplitude of the term on leaf assignment x (bit i = leaf i).
Scalar term_entry(const Term& t, unsigned x) {
  const std::size_t n = t.leaf_phases.size();
  const std::size_t m = t.extra_phases.size();
  long hadamards = 0;
  for (const auto& e : t.edges) hadamards += e.kind == EdgeKind::Hadamard ? 1 : 0;
  Scalar sum;
  for (unsigned y = 0; y < (1U << m); ++y) {
    auto bit = [&](int v) -> int {
      const auto u = static_cast<std::size_t>(v);
      return u < n ? static_cast<int>((x >> u) & 1U) : static_cast<int>((y >> (u - n)) & 1U);
    };
    bool alive = true;
    int phase = 0;
    for (const auto& e : t.edges) {
      if (e.kind == EdgeKind::Simple) {
        alive &= bit(e.a) == bit(e.b);
      } else {
        phase += 4 * bit(e.a) * bit(e.b);
      }
    }
    if (!alive) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (t.leaf_kind == VertexKind::Z) {
        phase += t.leaf_phases[i] * bit(static_cast<int>(i));
      } else if (bit(static_cast<int>(i)) != t.leaf_phases[i] / 4) {
        alive = false;
      }
    }
    if (!alive) continue;
    for (std::size_t j = 0; j < m; ++j) phase += t.extra_phases[j] * bit(static_cast<int>(n + j));
    sum += Scalar::from_phase(phase);
  }
  Scalar f = t.coefficient * Scalar::one_over_sqrt2_power(hadamards);
  if (t.leaf_kind == VertexKind::X) f.mul_sqrt2_power(static_cast<long>(n));
  return sum * f;
}

bool certify(const std::vector<Term>& terms) {
  const std::size_t n = terms.front().leaf_phases.size();
  for (unsigned x = 0; x < (1U << n); ++x) {
    Scalar total;
    for (const Term& t : terms) total += term_entry(t, x);
    if (total != Scalar::from_phase(std::popcount(x))) return false;
  }
  return true;
}

void check_leaves(const Diagram& d, const std::vector<VertexId>& leaves, std::size_t n, const char* what) {
  if (leaves.size() != n || std::set<VertexId>(leaves.begin(), leaves.end()).size() != n) {
    throw RuleNotApplicable(std::string(what) + ": need " + std::to_string(n) + " distinct leaves");
  }
  for (VertexId v : leaves) {
    if (!d.contains(v) || d.kind(v) != VertexKind::Z || d.phase(v).m() != 1 || d.degree(v) != 1) {
      throw RuleNotApplicable(std::string(what) + ": vertex " + std::to_string(v) + " is not a pi/4 leaf");
    }
  }
}

std::vector<Diagram> expand(const Diagram& d, const std::vector<VertexId>& leaves, const std::vector<Term>& terms) {
  if (!terms_certified()) throw InconsistencyError("stabiliser term tables failed certification");
  std::vector<Diagram> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    Diagram c = d;
    std::vector<VertexId> ids = leaves;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      c.set_kind(leaves[i], t.leaf_kind);
      c.set_phase(leaves[i], Phase(t.leaf_phases[i]));
    }
    for (int p : t.extra_phases) ids.push_back(c.add_vertex(VertexKind::Z, Phase(p)));
    for (const auto& e : t.edges) {
      c.add_edge(ids[static_cast<std::size_t>(e.a)], ids[static_cast<std::size_t>(e.b)], e.kind);
    }
    c.scalar() *= t.coefficient;
    out.push_back(std::move(c));
  }
  return out;
}

bool is_gadget_top(const Diagram& d, VertexId v) { return gadget_with_top(d, v).has_value(); }

}  // namespace

void DecompositionReport::merge(const DecompositionReport& o) {
  leaf_terms += o.leaf_terms;
  pruned += o.pruned;
  max_live_diagrams = std::max(max_live_diagrams, o.max_live_diagrams);
  initial_t = std::max(initial_t, o.initial_t);
  naive_terms += o.naive_terms;
  if (t_histogram.size() < o.t_histogram.size()) t_histogram.resize(o.t_histogram.size());
  for (std::size_t i = 0; i < o.t_histogram.size(); ++i) {
    for (const auto& [t, n] : o.t_histogram[i]) t_histogram[i][t] += n;
  }
  wall_time_ms += o.wall_time_ms;
  timed_out |= o.timed_out;
}

std::vector<VertexId> lowest_id_targets(const Diagram& d, std::size_t count) {
  std::vector<VertexId> plain, tops;
  for (VertexId v : d.vertex_ids()) {
    if (!d.is_spider(v) || !d.phase(v).is_t_like()) continue;
    (is_gadget_top(d, v) ? tops : plain).push_back(v);
  }
  if (plain.size() + tops.size() < count) {
    throw RuleNotApplicable("select_targets: only " + std::to_string(plain.size() + tops.size()) +
                            " odd-phase spiders");
  }
  plain.insert(plain.end(), tops.begin(), tops.end());
  plain.resize(count);
  return plain;
}

VertexId unfuse_t(Diagram& d, VertexId v) {
  if (!d.contains(v) || d.kind(v) != VertexKind::Z || !d.phase(v).is_t_like()) {
    throw RuleNotApplicable("unfuse_t: vertex " + std::to_string(v) + " is not an odd-phase Z spider");
  }
  d.add_to_phase(v, Phase(-1));
  const VertexId leaf = d.add_vertex(VertexKind::Z, Phase(1));
  d.add_edge(v, leaf, EdgeKind::Simple);
  return leaf;
}

bool terms_certified() {
  static const bool ok = certify(bss_terms()) && certify(pair_terms()) && certify(single_terms());
  return ok;
}

std::vector<Diagram> apply_bss(const Diagram& d, const std::vector<VertexId>& leaves) {
  check_leaves(d, leaves, 6, "apply_bss");
  return expand(d, leaves, bss_terms());
}

std::vector<Diagram> apply_pairwise(const Diagram& d, const std::vector<VertexId>& leaves) {
  check_leaves(d, leaves, 2, "apply_pairwise");
  return expand(d, leaves, pair_terms());
}

std::vector<Diagram> apply_single(const Diagram& d, VertexId leaf) {
  check_leaves(d, {leaf}, 1, "apply_single");
  return expand(d, {leaf}, single_terms());
}

namespace {

struct Stop {};

class Engine {
 public:
  explicit Engine(const DecomposeConfig& cfg) : cfg_(cfg) {}

  // Simplifies `d` and either finishes it (returns true, adding to `value`)
  // or fills `children`.
  bool step(Diagram& d, std::size_t depth, DecompositionReport& rep, Scalar& value, std::vector<Diagram>& children) {
    if (stop_.load(std::memory_order_relaxed)) throw Stop{};
    if (cfg_.deadline && std::chrono::steady_clock::now() >= *cfg_.deadline) {
      stop_.store(true);
      throw Stop{};
    }
    full_simp(d);
    const std::size_t t = d.t_count();
    if (rep.t_histogram.size() <= depth) rep.t_histogram.resize(depth + 1);
    ++rep.t_histogram[depth][t];
    if (d.scalar().is_zero()) {
      // Counts as an evaluated term with value 0; nothing below it is expanded.
      ++rep.leaf_terms;
      ++rep.pruned;
      return true;
    }
    if (t == 0) {
      if (d.num_spiders() != 0) throw InconsistencyError("Clifford diagram did not reduce to a scalar");
      ++rep.leaf_terms;
      value += d.scalar();
      return true;
    }
    // Rewrites leave dead slots behind; every child copies d, so shed them.
    d = d.compacted();
    const std::size_t k = t >= 6 ? 6 : (t >= 2 ? 2 : 1);
    std::vector<VertexId> targets = cfg_.policy(d, k);
    for (VertexId& v : targets) {
      if (!(d.degree(v) == 1 && d.phase(v).m() == 1)) v = unfuse_t(d, v);
    }
    children = k == 6 ? apply_bss(d, targets) : k == 2 ? apply_pairwise(d, targets) : apply_single(d, targets[0]);
    return false;
  }

  // Depth-first evaluation; returns the peak number of live diagrams.
  std::uint64_t dfs(Diagram d, std::size_t depth, DecompositionReport& rep, Scalar& value) {
    std::vector<Diagram> children;
    if (step(d, depth, rep, value, children)) return 1;
    const std::uint64_t n = children.size();
    std::uint64_t peak = n;
    for (std::uint64_t i = 0; i < n; ++i) {
      // Siblings not yet visited stay alive while child i is explored.
      const std::uint64_t sub = dfs(std::move(children[i]), depth + 1, rep, value);
      peak = std::max(peak, (n - i - 1) + sub);
    }
    return peak;
  }

  std::atomic<bool>& stop() { return stop_; }

 private:
  const DecomposeConfig& cfg_;
  std::atomic<bool> stop_{false};
};

}  // namespace

Decomposition decompose(Diagram d, const DecomposeConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  if (!d.inputs().empty() || !d.outputs().empty()) throw ConstructionError("decompose needs a closed diagram");
  Decomposition res;
  DecompositionReport& rep = res.report;
  rep.naive_terms = naive_terms(d.t_count());
  Engine engine(cfg);

  // Breadth-first fan-out; nodes are kept in a fixed order so that the
  // final sum and all counters do not depend on the schedule.
  std::vector<Diagram> level;
  level.push_back(std::move(d));
  std::size_t depth = 0;
  std::uint64_t peak = 1;
  try {
    const std::size_t fan_out = std::max<std::size_t>(1, cfg.parallel_depth);
    for (; depth < fan_out && !level.empty(); ++depth) {
      std::vector<Diagram> next;
      for (std::size_t i = 0; i < level.size(); ++i) {
        std::vector<Diagram> children;
        if (!engine.step(level[i], depth, rep, res.value, children)) {
          for (Diagram& c : children) next.push_back(std::move(c));
        }
        peak = std::max<std::uint64_t>(peak, (level.size() - i - 1) + next.size());
        if (depth == 0) rep.initial_t = level[i].t_count();
      }
      level = std::move(next);
    }
  } catch (const Stop&) {
    rep.timed_out = true;
  }

  if (!rep.timed_out && !level.empty()) {
    const std::size_t n = level.size();
    std::vector<DecompositionReport> reps(n);
    std::vector<Scalar> values(n);
    std::vector<std::uint64_t> peaks(n, 0);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        try {
          peaks[i] = engine.dfs(std::move(level[i]), depth, reps[i], values[i]);
        } catch (const Stop&) {
          reps[i].timed_out = true;
        } catch (...) {
          const std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          engine.stop().store(true);
        }
      }
    };
    const std::size_t threads = std::max<std::size_t>(1, std::min(cfg.threads, n));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
    for (std::size_t i = 0; i < n; ++i) {
      rep.merge(reps[i]);
      res.value += values[i];
      peak = std::max<std::uint64_t>(peak, (n - i - 1) + peaks[i]);
    }
  }
  rep.max_live_diagrams = peak;
  rep.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace zxsim
