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

#include <string>
#include <string_view>
#include <vector>

#include "zxsim/diagram.hpp"

namespace zxsim {

enum class Rule {
  Fuse,
  LocalComp,
  Pivot,
  PivotGadget,
  GadgetFuse,
  IdGadgetFuse,
  ParallelEdge,
  SelfLoop,
  // Bookkeeping rules used by the normaliser and the simplifier loop.
  ColourChange,
  HBoxRemoval,
  BoundaryFix,
  IdRemove,
  ScalarRemoval,
  GadgetNormalise,
  StateCopy,
};

std::string_view rule_name(Rule r);

struct RewriteStep {
  Rule rule;
  std::vector<VertexId> vertices;
  Scalar factor;
};

/// Optional rewrite log; a null pointer disables tracing.
using Trace = std::vector<RewriteStep>*;

/// One JSON object per line: {"rule":..., "vertices":[...], "factor":"(k; a, b, c, d)"}.
std::string trace_to_json_lines(const std::vector<RewriteStep>& steps);

/**
 * Brings `d` into graph-like form in place: HBoxes become edges, X spiders
 * are colour-changed, spiders joined by simple edges are fused, self-loops
 * and parallel Hadamard edges are removed, and boundary wires get identity
 * spiders so that every boundary hangs off its own Z spider by a simple
 * edge. The value is preserved exactly.
 */
void to_graph_like(Diagram& d, Trace trace = nullptr);

/// Checks the graph-like conditions; on failure, `why` describes the first violation.
bool is_graph_like(const Diagram& d, std::string* why = nullptr);

// Local helpers shared with the simplifier.

/// Merges `gone` into `keep`; they must be Z spiders joined by a simple edge.
void fuse(Diagram& d, VertexId keep, VertexId gone, Trace trace = nullptr);
/// Removes self-loops on Z spider v and cancels Hadamard-edge pairs at v.
void normalise_edges(Diagram& d, VertexId v, Trace trace = nullptr);
/// Toggles the Hadamard edge between two distinct spiders. The scalar is not
/// touched; callers account for the change in edge count.
void toggle_hadamard(Diagram& d, VertexId u, VertexId v);

}  // namespace zxsim
