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

#include "zxsim/graph_like.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "zxsim/errors.hpp"

namespace zxsim {

namespace {

void log(Trace trace, Rule rule, std::vector<VertexId> vs, Scalar factor) {
  if (trace) trace->push_back({rule, std::move(vs), std::move(factor)});
}

EdgeKind combine(EdgeKind a, EdgeKind b) { return a == b ? EdgeKind::Simple : EdgeKind::Hadamard; }

struct Leg {
  VertexId v;
  EdgeKind kind;
};

std::vector<Leg> legs_of(const Diagram& d, VertexId v) {
  std::vector<Leg> legs;
  for (const Adjacent& a : d.neighbours(v)) {
    for (int i = 0; i < a.edges.simple; ++i) legs.push_back({a.v, EdgeKind::Simple});
    for (int i = 0; i < a.edges.hadamard; ++i) legs.push_back({a.v, EdgeKind::Hadamard});
  }
  return legs;
}

void remove_hbox(Diagram& d, VertexId h, Trace trace) {
  if (d.degree(h) != 2) throw ConstructionError("HBox must have arity 2");
  const auto legs = legs_of(d, h);
  Scalar factor = Scalar::one();
  if (legs.size() == 1) {
    // Both legs form a loop on the box itself: a trace of H or of H*H.
    factor = legs[0].kind == EdgeKind::Simple ? Scalar::zero() : Scalar(0, 2, 0, 0, 0);
    d.scalar() *= factor;
  } else {
    const EdgeKind k = toggled(combine(legs[0].kind, legs[1].kind));
    d.add_edge(legs[0].v, legs[1].v, k);
  }
  d.remove_vertex(h);
  log(trace, Rule::HBoxRemoval, {h}, factor);
}

void colour_change(Diagram& d, VertexId v, Trace trace) {
  std::vector<Adjacent> adj(d.neighbours(v).begin(), d.neighbours(v).end());
  for (const Adjacent& a : adj) {
    if (a.v == v) continue;
    d.remove_edges(v, a.v);
    d.add_edge(v, a.v, EdgeKind::Simple, a.edges.hadamard);
    d.add_edge(v, a.v, EdgeKind::Hadamard, a.edges.simple);
  }
  d.set_kind(v, VertexKind::Z);
  log(trace, Rule::ColourChange, {v}, Scalar::one());
}

// Fuses every Z neighbour joined to v by a simple edge, repeatedly.
void fuse_all_into(Diagram& d, VertexId v, Trace trace) {
  for (;;) {
    VertexId target = Diagram::kNoVertex;
    for (const Adjacent& a : d.neighbours(v)) {
      if (a.v != v && a.edges.simple > 0 && d.kind(a.v) == VertexKind::Z) {
        target = a.v;
        break;
      }
    }
    if (target == Diagram::kNoVertex) return;
    fuse(d, v, target, trace);
  }
}

}  // namespace

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::Fuse: return "Fuse";
    case Rule::LocalComp: return "LocalComp";
    case Rule::Pivot: return "Pivot";
    case Rule::PivotGadget: return "PivotGadget";
    case Rule::GadgetFuse: return "GadgetFuse";
    case Rule::IdGadgetFuse: return "IdGadgetFuse";
    case Rule::ParallelEdge: return "ParallelEdge";
    case Rule::SelfLoop: return "SelfLoop";
    case Rule::ColourChange: return "ColourChange";
    case Rule::HBoxRemoval: return "HBoxRemoval";
    case Rule::BoundaryFix: return "BoundaryFix";
    case Rule::IdRemove: return "IdRemove";
    case Rule::ScalarRemoval: return "ScalarRemoval";
    case Rule::GadgetNormalise: return "GadgetNormalise";
    case Rule::StateCopy: return "StateCopy";
  }
  return "?";
}

std::string trace_to_json_lines(const std::vector<RewriteStep>& steps) {
  std::ostringstream os;
  for (const auto& s : steps) {
    nlohmann::json j;
    j["rule"] = rule_name(s.rule);
    j["vertices"] = s.vertices;
    j["factor"] = s.factor.to_string();
    os << j.dump() << "\n";
  }
  return os.str();
}

void toggle_hadamard(Diagram& d, VertexId u, VertexId v) {
  if (d.edge(u, v).hadamard > 0) {
    d.remove_edge(u, v, EdgeKind::Hadamard);
  } else {
    d.add_edge(u, v, EdgeKind::Hadamard);
  }
}

void fuse(Diagram& d, VertexId keep, VertexId gone, Trace trace) {
  if (keep == gone || d.kind(keep) != VertexKind::Z || d.kind(gone) != VertexKind::Z ||
      d.edge(keep, gone).simple == 0) {
    throw RuleNotApplicable("fuse needs two Z spiders joined by a simple edge");
  }
  std::vector<Adjacent> adj(d.neighbours(gone).begin(), d.neighbours(gone).end());
  for (const Adjacent& a : adj) {
    if (a.v == gone || a.v == keep) {
      // Loops on `gone` and the remaining keep-gone edges all become loops on `keep`.
      const int s = a.edges.simple - (a.v == keep ? 1 : 0);
      d.add_edge(keep, keep, EdgeKind::Simple, s);
      d.add_edge(keep, keep, EdgeKind::Hadamard, a.edges.hadamard);
    } else {
      d.add_edge(keep, a.v, EdgeKind::Simple, a.edges.simple);
      d.add_edge(keep, a.v, EdgeKind::Hadamard, a.edges.hadamard);
    }
  }
  d.add_to_phase(keep, d.phase(gone));
  d.remove_vertex(gone);
  log(trace, Rule::Fuse, {keep, gone}, Scalar::one());
  normalise_edges(d, keep, trace);
}

void normalise_edges(Diagram& d, VertexId v, Trace trace) {
  if (d.kind(v) != VertexKind::Z) return;
  const EdgeCount loop = d.edge(v, v);
  if (loop.total() > 0) {
    d.remove_edges(v, v);
    // A Hadamard loop is (1/sqrt2) (-1)^x on the spider's value.
    d.add_to_phase(v, Phase(4 * loop.hadamard));
    Scalar f = Scalar::one_over_sqrt2_power(loop.hadamard);
    d.scalar() *= f;
    log(trace, Rule::SelfLoop, {v}, std::move(f));
  }
  std::vector<Adjacent> adj(d.neighbours(v).begin(), d.neighbours(v).end());
  for (const Adjacent& a : adj) {
    if (a.v == v || d.kind(a.v) != VertexKind::Z || a.edges.hadamard < 2) continue;
    const int pairs = a.edges.hadamard / 2;
    d.remove_edge(v, a.v, EdgeKind::Hadamard, 2 * pairs);
    Scalar f = Scalar::one_over_sqrt2_power(2 * pairs);
    d.scalar() *= f;
    log(trace, Rule::ParallelEdge, {v, a.v}, std::move(f));
  }
}

void to_graph_like(Diagram& d, Trace trace) {
  for (VertexId v : d.vertex_ids()) {
    if (d.contains(v) && d.kind(v) == VertexKind::HBox) remove_hbox(d, v, trace);
  }
  for (VertexId v : d.vertex_ids()) {
    if (d.kind(v) == VertexKind::X) colour_change(d, v, trace);
  }
  for (VertexId v : d.vertex_ids()) {
    if (d.contains(v) && d.kind(v) == VertexKind::Z) {
      fuse_all_into(d, v, trace);
      normalise_edges(d, v, trace);
    }
  }

  std::vector<VertexId> boundaries = d.inputs();
  boundaries.insert(boundaries.end(), d.outputs().begin(), d.outputs().end());
  std::set<VertexId> claimed;
  std::set<VertexId> done;
  for (VertexId b : boundaries) {
    if (done.count(b)) continue;
    if (d.degree(b) != 1) throw ConstructionError("boundary must have degree 1");
    const Adjacent a = d.neighbours(b)[0];
    const EdgeKind k = a.edges.hadamard ? EdgeKind::Hadamard : EdgeKind::Simple;
    const VertexId s = a.v;
    if (d.is_boundary(s)) {
      d.remove_edges(b, s);
      const VertexId z1 = d.add_vertex(VertexKind::Z);
      const VertexId z2 = d.add_vertex(VertexKind::Z);
      d.add_edge(b, z1, EdgeKind::Simple);
      d.add_edge(s, z2, EdgeKind::Simple);
      if (k == EdgeKind::Hadamard) {
        d.add_edge(z1, z2, EdgeKind::Hadamard);
      } else {
        const VertexId zm = d.add_vertex(VertexKind::Z);
        d.add_edge(z1, zm, EdgeKind::Hadamard);
        d.add_edge(zm, z2, EdgeKind::Hadamard);
      }
      claimed.insert(z1);
      claimed.insert(z2);
      done.insert(s);
      log(trace, Rule::BoundaryFix, {b, s}, Scalar::one());
    } else if (k == EdgeKind::Hadamard) {
      d.remove_edges(b, s);
      const VertexId z = d.add_vertex(VertexKind::Z);
      d.add_edge(b, z, EdgeKind::Simple);
      d.add_edge(z, s, EdgeKind::Hadamard);
      claimed.insert(z);
      log(trace, Rule::BoundaryFix, {b, s}, Scalar::one());
    } else if (claimed.count(s)) {
      d.remove_edges(b, s);
      const VertexId z1 = d.add_vertex(VertexKind::Z);
      const VertexId z2 = d.add_vertex(VertexKind::Z);
      d.add_edge(b, z1, EdgeKind::Simple);
      d.add_edge(z1, z2, EdgeKind::Hadamard);
      d.add_edge(z2, s, EdgeKind::Hadamard);
      claimed.insert(z1);
      log(trace, Rule::BoundaryFix, {b, s}, Scalar::one());
    } else {
      claimed.insert(s);
    }
    done.insert(b);
  }
}

bool is_graph_like(const Diagram& d, std::string* why) {
  auto fail = [why](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (VertexId v : d.vertex_ids()) {
    const VertexKind k = d.kind(v);
    if (k == VertexKind::X || k == VertexKind::HBox) return fail("non-Z spider " + std::to_string(v));
    int boundary_neighbours = 0;
    for (const Adjacent& a : d.neighbours(v)) {
      if (a.v == v) return fail("self-loop at " + std::to_string(v));
      if (a.edges.total() != 1) return fail("parallel edges at " + std::to_string(v));
      const bool boundary_edge = d.is_boundary(v) || d.is_boundary(a.v);
      if (boundary_edge && a.edges.simple != 1) return fail("Hadamard boundary edge at " + std::to_string(v));
      if (!boundary_edge && a.edges.hadamard != 1) return fail("simple spider edge at " + std::to_string(v));
      if (d.is_boundary(a.v)) ++boundary_neighbours;
    }
    if (d.is_boundary(v)) {
      if (d.degree(v) != 1) return fail("boundary of degree != 1");
      if (d.is_boundary(d.neighbours(v)[0].v)) return fail("bare boundary wire");
    } else if (boundary_neighbours > 1) {
      return fail("spider " + std::to_string(v) + " touches several boundaries");
    }
  }
  return true;
}

}  // namespace zxsim
