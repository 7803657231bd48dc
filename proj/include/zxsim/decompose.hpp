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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "zxsim/diagram.hpp"
#include "zxsim/scalar.hpp"

namespace zxsim {

/// Picks `count` odd-phase spiders of a graph-like diagram to decompose.
using TargetPolicy = std::function<std::vector<VertexId>(const Diagram&, std::size_t count)>;

/// Lowest vertex ids first, ordinary spiders before gadget tops. Throws
/// RuleNotApplicable when fewer than `count` odd-phase spiders exist.
std::vector<VertexId> lowest_id_targets(const Diagram& d, std::size_t count);
inline std::vector<VertexId> select_targets(const Diagram& d) { return lowest_id_targets(d, 6); }

struct DecomposeConfig {
  /// Levels expanded breadth-first before work is handed to the pool (at least 1).
  std::size_t parallel_depth = 3;
  std::size_t threads = 1;
  /// Checked between branches; nullopt means no limit.
  std::optional<std::chrono::steady_clock::time_point> deadline;
  TargetPolicy policy = lowest_id_targets;
};

struct DecompositionReport {
  /// Terminal branches: fully Clifford, or exactly zero.
  std::uint64_t leaf_terms = 0;
  /// Terminal branches whose scalar became exactly zero.
  std::uint64_t pruned = 0;
  /// Peak number of diagrams held at once by a single-worker schedule of the
  /// same tree; independent of the thread count.
  std::uint64_t max_live_diagrams = 0;
  /// Odd-phase spiders after the first full_simp.
  std::size_t initial_t = 0;
  /// 7^ceil(t0/6) for the T-count t0 before simplification; summed by merge.
  BigInt naive_terms = 0;
  /// t_histogram[depth][t]: nodes at that depth whose simplified diagram had t odd spiders.
  std::vector<std::map<std::size_t, std::uint64_t>> t_histogram;
  double wall_time_ms = 0.0;
  bool timed_out = false;

  /// Adds counters of another run; peaks take the maximum.
  void merge(const DecompositionReport& other);
};

struct Decomposition {
  Scalar value;
  DecompositionReport report;
};

/// Splits a pi/4 off odd-phase spider v onto a fresh leaf joined by a plain
/// wire; exact, no scalar. Returns the leaf.
VertexId unfuse_t(Diagram& d, VertexId v);

/// The leaves must be distinct degree-1 Z spiders of phase pi/4. Each result
/// replaces them by one stabiliser term; the values sum to the value of `d`.
std::vector<Diagram> apply_bss(const Diagram& d, const std::vector<VertexId>& leaves);
std::vector<Diagram> apply_pairwise(const Diagram& d, const std::vector<VertexId>& leaves);
std::vector<Diagram> apply_single(const Diagram& d, VertexId leaf);

/// Exact check of all term tables against (|0> + w|1>)^n; computed once.
bool terms_certified();

/// Exact value of a closed diagram. On timeout the report says so and the
/// value is the partial sum.
Decomposition decompose(Diagram d, const DecomposeConfig& cfg = {});

}  // namespace zxsim
