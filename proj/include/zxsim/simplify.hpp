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

#include <cstddef>
#include <optional>

#include "zxsim/diagram.hpp"
#include "zxsim/graph_like.hpp"

namespace zxsim {

/// A degree-1 spider (the top) hanging off a 0/pi spider (the base) by a
/// Hadamard edge. Only gadgets with odd top phase block pivoting.
struct Gadget {
  VertexId base;
  VertexId top;
  bool operator==(const Gadget&) const = default;
};

// Predicates on graph-like diagrams.

/// Z spider with no boundary neighbour.
bool is_internal(const Diagram& d, VertexId v);
std::optional<Gadget> gadget_with_top(const Diagram& d, VertexId top, bool require_odd = true);
/// Base of a gadget whose top phase is odd.
bool is_gadget_base(const Diagram& d, VertexId v);
bool has_degree_one_neighbour(const Diagram& d, VertexId v, VertexId except = Diagram::kNoVertex);

// Individual rewrite rules on graph-like diagrams. Each keeps the value of
// the diagram exactly (the scalar absorbs every factor) and throws
// RuleNotApplicable when its precondition does not hold.

/// Removes an internal spider with phase +-pi/2, complementing its neighbourhood.
void local_comp(Diagram& d, VertexId v, Trace trace = nullptr);
/// Removes two connected internal 0/pi spiders, neither a gadget base.
void pivot(Diagram& d, VertexId u, VertexId v, Trace trace = nullptr);
/// Moves v's odd phase onto a fresh gadget, then pivots u and v away. Returns the gadget.
Gadget pivot_gadget(Diagram& d, VertexId u, VertexId v, Trace trace = nullptr);
/// Merges g2 into g1; their bases must share the same neighbours apart from the tops.
void gadget_fuse(Diagram& d, Gadget g1, Gadget g2, Trace trace = nullptr);
/// Fuses a gadget whose base has a single other neighbour into that neighbour.
void id_gadget_fuse(Diagram& d, Gadget g, Trace trace = nullptr);
/// Makes a gadget base phase 0 by flipping the top phase.
void normalise_gadget(Diagram& d, Gadget g, Trace trace = nullptr);
/// Removes an internal phase-0 spider with exactly two spider neighbours and fuses them.
void remove_identity(Diagram& d, VertexId v, Trace trace = nullptr);
/// Removes a 0/pi leaf u and its neighbour v, pushing the leaf's phase onto
/// v's other neighbours.
void copy_state(Diagram& d, VertexId u, Trace trace = nullptr);
/// Evaluates a spider without neighbours, or a pair joined only to each other.
void remove_scalar_component(Diagram& d, VertexId v, Trace trace = nullptr);

/// Counters for one full_simp run.
struct SimpStats {
  std::size_t local_comps = 0;
  std::size_t pivots = 0;
  std::size_t pivot_gadgets = 0;
  std::size_t gadget_fusions = 0;
  std::size_t id_removals = 0;
  std::size_t scalar_removals = 0;
  std::size_t state_copies = 0;
  std::size_t rounds = 0;
};

/**
 * Rewrites `d` to a fixpoint of the rules above, starting from
 * to_graph_like. Deterministic: matches are taken in ascending vertex id.
 * A closed Clifford diagram ends with no spiders; in general every
 * remaining internal spider is non-Clifford or belongs to a gadget.
 */
SimpStats full_simp(Diagram& d, Trace trace = nullptr);

/// The Clifford part of full_simp only (no gadget rules).
SimpStats clifford_simp(Diagram& d, Trace trace = nullptr);

}  // namespace zxsim
