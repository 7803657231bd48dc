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

#include "zxsim/simplify.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "zxsim/errors.hpp"

namespace zxsim {

namespace {

void log(Trace trace, Rule rule, std::vector<VertexId> vs, const Scalar& factor) {
  if (trace) trace->push_back({rule, std::move(vs), factor});
}

std::vector<VertexId> sorted_neighbours(const Diagram& d, VertexId v) {
  std::vector<VertexId> out;
  out.reserve(d.num_neighbours(v));
  for (const Adjacent& a : d.neighbours(v)) {
    if (a.v != v) out.push_back(a.v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool has_boundary_neighbour(const Diagram& d, VertexId v) {
  for (const Adjacent& a : d.neighbours(v)) {
    if (d.is_boundary(a.v)) return true;
  }
  return false;
}

// Z spider whose every neighbour is a Z spider behind exactly one Hadamard edge.
bool clean_spider(const Diagram& d, VertexId v) {
  if (!d.contains(v) || d.kind(v) != VertexKind::Z) return false;
  for (const Adjacent& a : d.neighbours(v)) {
    if (a.v == v || d.kind(a.v) != VertexKind::Z || a.edges.simple != 0 || a.edges.hadamard != 1) return false;
  }
  return true;
}

bool can_copy_state(const Diagram& d, VertexId u) {
  if (!clean_spider(d, u) || !d.phase(u).is_pauli() || d.num_neighbours(u) != 1) return false;
  const VertexId v = d.neighbours(u)[0].v;
  return clean_spider(d, v) && d.num_neighbours(v) > 1;
}

bool can_local_comp(const Diagram& d, VertexId v) { return clean_spider(d, v) && d.phase(v).is_proper_clifford(); }

bool pivot_candidate(const Diagram& d, VertexId v) {
  return clean_spider(d, v) && d.phase(v).is_pauli() && !is_gadget_base(d, v);
}

bool pivot_gadget_u(const Diagram& d, VertexId u) {
  return pivot_candidate(d, u) && !has_degree_one_neighbour(d, u);
}

bool pivot_gadget_v(const Diagram& d, VertexId v, VertexId u) {
  return v != u && clean_spider(d, v) && !d.phase(v).is_pauli() && d.num_neighbours(v) > 1;
}

bool can_remove_identity(const Diagram& d, VertexId v) {
  if (!clean_spider(d, v) || !d.phase(v).is_zero() || d.num_neighbours(v) != 2) return false;
  const auto n = d.neighbours(v);
  // Fusing two boundary-adjacent spiders would leave one spider on two boundaries.
  return !(has_boundary_neighbour(d, n[0].v) && has_boundary_neighbour(d, n[1].v));
}

bool is_scalar_component(const Diagram& d, VertexId v) {
  if (!d.contains(v) || d.kind(v) != VertexKind::Z) return false;
  if (d.num_neighbours(v) == 0) return true;
  if (d.num_neighbours(v) != 1) return false;
  const Adjacent a = d.neighbours(v)[0];
  return a.v != v && d.kind(a.v) == VertexKind::Z && a.edges.hadamard == 1 && a.edges.simple == 0 &&
         d.num_neighbours(a.v) == 1;
}

bool same_base_neighbourhood(const Diagram& d, Gadget g1, Gadget g2) {
  auto n1 = sorted_neighbours(d, g1.base);
  auto n2 = sorted_neighbours(d, g2.base);
  std::erase(n1, g1.top);
  std::erase(n2, g2.top);
  return n1 == n2;
}

}  // namespace

bool is_internal(const Diagram& d, VertexId v) {
  return d.contains(v) && d.kind(v) == VertexKind::Z && !has_boundary_neighbour(d, v);
}

bool has_degree_one_neighbour(const Diagram& d, VertexId v, VertexId except) {
  for (const Adjacent& a : d.neighbours(v)) {
    if (a.v != v && a.v != except && d.degree(a.v) == 1) return true;
  }
  return false;
}

std::optional<Gadget> gadget_with_top(const Diagram& d, VertexId top, bool require_odd) {
  if (!d.contains(top) || d.kind(top) != VertexKind::Z || d.degree(top) != 1 ||
      (require_odd && !d.phase(top).is_t_like())) {
    return std::nullopt;
  }
  const Adjacent a = d.neighbours(top)[0];
  if (a.edges.hadamard != 1 || d.kind(a.v) != VertexKind::Z || !d.phase(a.v).is_pauli() || d.degree(a.v) < 2) {
    return std::nullopt;
  }
  return Gadget{a.v, top};
}

bool is_gadget_base(const Diagram& d, VertexId v) {
  for (const Adjacent& a : d.neighbours(v)) {
    if (a.v == v) continue;
    const auto g = gadget_with_top(d, a.v);
    if (g && g->base == v) return true;
  }
  return false;
}

void local_comp(Diagram& d, VertexId v, Trace trace) {
  if (!can_local_comp(d, v)) throw RuleNotApplicable("local_comp: vertex " + std::to_string(v));
  const Phase p = d.phase(v);
  const auto ns = sorted_neighbours(d, v);
  const long n = static_cast<long>(ns.size());
  long connected = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    for (std::size_t j = i + 1; j < ns.size(); ++j) {
      if (d.connected(ns[i], ns[j])) ++connected;
      toggle_hadamard(d, ns[i], ns[j]);
    }
    d.add_to_phase(ns[i], -p);
  }
  d.remove_vertex(v);
  Scalar f = Scalar::from_phase(p.m() == 2 ? 1 : 7);
  f.mul_sqrt2_power((n - 1) * (n - 2) / 2 - 2 * connected);
  d.scalar() *= f;
  log(trace, Rule::LocalComp, {v}, f);
}

namespace {

// Pivot on two connected clean Pauli spiders, with no gadget check.
void pivot_unchecked(Diagram& d, VertexId u, VertexId v, Trace trace) {
  const auto nu = sorted_neighbours(d, u);
  const auto nv = sorted_neighbours(d, v);
  std::vector<VertexId> a, b, c;
  for (VertexId x : nu) {
    if (x == v) continue;
    (std::binary_search(nv.begin(), nv.end(), x) ? c : a).push_back(x);
  }
  for (VertexId x : nv) {
    if (x != u && !std::binary_search(nu.begin(), nu.end(), x)) b.push_back(x);
  }
  const int au = d.phase(u).m() / 4;
  const int av = d.phase(v).m() / 4;
  // Net change in the number of Hadamard edges.
  long delta = -static_cast<long>(nu.size() + nv.size() - 1);
  auto complement = [&](const std::vector<VertexId>& xs, const std::vector<VertexId>& ys) {
    for (VertexId x : xs) {
      for (VertexId y : ys) {
        delta += d.connected(x, y) ? -1 : 1;
        toggle_hadamard(d, x, y);
      }
    }
  };
  complement(a, b);
  complement(a, c);
  complement(b, c);
  for (VertexId x : a) d.add_to_phase(x, Phase(4 * av));
  for (VertexId x : b) d.add_to_phase(x, Phase(4 * au));
  for (VertexId x : c) d.add_to_phase(x, Phase(4 * (1 + au + av)));
  d.remove_vertex(u);
  d.remove_vertex(v);
  Scalar f(0, (au & av) ? -2 : 2, 0, 0, 0);
  f.mul_sqrt2_power(delta);
  d.scalar() *= f;
  log(trace, Rule::Pivot, {u, v}, f);
}

}  // namespace

void pivot(Diagram& d, VertexId u, VertexId v, Trace trace) {
  if (u == v || !pivot_candidate(d, u) || !pivot_candidate(d, v) || !d.connected(u, v)) {
    throw RuleNotApplicable("pivot: vertices " + std::to_string(u) + ", " + std::to_string(v));
  }
  pivot_unchecked(d, u, v, trace);
}

Gadget pivot_gadget(Diagram& d, VertexId u, VertexId v, Trace trace) {
  if (u == v || !pivot_gadget_u(d, u) || !pivot_gadget_v(d, v, u) || !d.connected(u, v)) {
    throw RuleNotApplicable("pivot_gadget: vertices " + std::to_string(u) + ", " + std::to_string(v));
  }
  // v -H- base -H- top carries v's phase unchanged in value.
  const Phase p = d.phase(v);
  d.set_phase(v, Phase(0));
  const VertexId base = d.add_vertex(VertexKind::Z);
  const VertexId top = d.add_vertex(VertexKind::Z, p);
  d.add_edge(v, base, EdgeKind::Hadamard);
  d.add_edge(base, top, EdgeKind::Hadamard);
  log(trace, Rule::PivotGadget, {u, v, base, top}, Scalar::one());
  // A leaf on v now makes v look like a gadget base; the pivot is still valid.
  pivot_unchecked(d, u, v, trace);
  return Gadget{base, top};
}

void normalise_gadget(Diagram& d, Gadget g, Trace trace) {
  const auto check = gadget_with_top(d, g.top, false);
  if (!check || check->base != g.base) throw RuleNotApplicable("normalise_gadget: not a gadget");
  if (d.phase(g.base).is_zero()) return;
  const int m = d.phase(g.top).m();
  d.set_phase(g.base, Phase(0));
  d.set_phase(g.top, Phase(-m));
  Scalar f = Scalar::from_phase(m);
  d.scalar() *= f;
  log(trace, Rule::GadgetNormalise, {g.base, g.top}, f);
}

void gadget_fuse(Diagram& d, Gadget g1, Gadget g2, Trace trace) {
  const auto c1 = gadget_with_top(d, g1.top, false);
  const auto c2 = gadget_with_top(d, g2.top, false);
  if (!c1 || !c2 || c1->base != g1.base || c2->base != g2.base || g1.base == g2.base ||
      !same_base_neighbourhood(d, g1, g2)) {
    throw RuleNotApplicable("gadget_fuse: gadgets do not match");
  }
  normalise_gadget(d, g1, trace);
  normalise_gadget(d, g2, trace);
  const long s = static_cast<long>(d.num_neighbours(g1.base)) - 1;
  d.add_to_phase(g1.top, d.phase(g2.top));
  d.remove_vertex(g2.top);
  d.remove_vertex(g2.base);
  Scalar f(0, 2, 0, 0, 0);
  f.mul_sqrt2_power(-(s + 1));
  d.scalar() *= f;
  log(trace, Rule::GadgetFuse, {g1.base, g1.top, g2.base, g2.top}, f);
}

void id_gadget_fuse(Diagram& d, Gadget g, Trace trace) {
  const auto c = gadget_with_top(d, g.top, false);
  if (!c || c->base != g.base || d.num_neighbours(g.base) != 2) {
    throw RuleNotApplicable("id_gadget_fuse: base needs exactly one other neighbour");
  }
  VertexId w = Diagram::kNoVertex;
  for (const Adjacent& a : d.neighbours(g.base)) {
    if (a.v != g.top) w = a.v;
  }
  if (d.kind(w) != VertexKind::Z || d.edge(g.base, w).hadamard != 1 || d.edge(g.base, w).simple != 0) {
    throw RuleNotApplicable("id_gadget_fuse: base neighbour is not a spider");
  }
  normalise_gadget(d, g, trace);
  d.add_to_phase(w, d.phase(g.top));
  d.remove_vertex(g.top);
  d.remove_vertex(g.base);
  log(trace, Rule::IdGadgetFuse, {g.base, g.top, w}, Scalar::one());
}

void remove_identity(Diagram& d, VertexId v, Trace trace) {
  if (!can_remove_identity(d, v)) throw RuleNotApplicable("remove_identity: vertex " + std::to_string(v));
  const auto ns = sorted_neighbours(d, v);
  VertexId keep = ns[0], gone = ns[1];
  if (has_boundary_neighbour(d, gone)) std::swap(keep, gone);
  d.remove_vertex(v);
  d.add_edge(keep, gone, EdgeKind::Simple);
  log(trace, Rule::IdRemove, {v}, Scalar::one());
  fuse(d, keep, gone, trace);
}

void copy_state(Diagram& d, VertexId u, Trace trace) {
  if (!can_copy_state(d, u)) throw RuleNotApplicable("copy_state: vertex " + std::to_string(u));
  const VertexId v = d.neighbours(u)[0].v;
  const int a = d.phase(u).m() / 4;
  // Summing out u pins v to a.
  Scalar f = Scalar::from_phase(a * d.phase(v).m()) * Scalar(0, 2, 0, 0, 0);
  f.mul_sqrt2_power(-static_cast<int>(d.num_neighbours(v)));
  for (const Adjacent& w : d.neighbours(v)) {
    if (w.v != u) d.add_to_phase(w.v, Phase(4 * a));
  }
  d.remove_vertex(u);
  d.remove_vertex(v);
  d.scalar() *= f;
  log(trace, Rule::StateCopy, {u, v}, f);
}

void remove_scalar_component(Diagram& d, VertexId v, Trace trace) {
  if (!is_scalar_component(d, v)) throw RuleNotApplicable("remove_scalar_component: vertex " + std::to_string(v));
  const int a = d.phase(v).m();
  Scalar f;
  if (d.num_neighbours(v) == 0) {
    f = Scalar::one_plus_phase(a);
    d.remove_vertex(v);
    d.scalar() *= f;
    log(trace, Rule::ScalarRemoval, {v}, f);
    return;
  }
  const VertexId w = d.neighbours(v)[0].v;
  const int b = d.phase(w).m();
  // (1 + w^a + w^b - w^(a+b)) / sqrt2
  f = Scalar::one() + Scalar::from_phase(a) + Scalar::from_phase(b) - Scalar::from_phase(a + b);
  f.mul_sqrt2_power(-1);
  d.remove_vertex(v);
  d.remove_vertex(w);
  d.scalar() *= f;
  log(trace, Rule::ScalarRemoval, {v, w}, f);
}

// ---------------------------------------------------------------------------
// Driver

namespace {

bool identity_pass(Diagram& d, Trace trace, SimpStats& st) {
  bool changed = false;
  for (VertexId v : d.vertex_ids()) {
    if (d.contains(v) && can_remove_identity(d, v)) {
      remove_identity(d, v, trace);
      ++st.id_removals;
      changed = true;
    }
  }
  return changed;
}

bool local_comp_pass(Diagram& d, Trace trace, SimpStats& st) {
  bool changed = false;
  for (VertexId v : d.vertex_ids()) {
    if (can_local_comp(d, v)) {
      local_comp(d, v, trace);
      ++st.local_comps;
      changed = true;
    }
  }
  return changed;
}

bool pivot_pass(Diagram& d, Trace trace, SimpStats& st) {
  bool changed = false;
  for (VertexId u : d.vertex_ids()) {
    if (!pivot_candidate(d, u)) continue;
    for (VertexId v : sorted_neighbours(d, u)) {
      if (pivot_candidate(d, v)) {
        pivot(d, u, v, trace);
        ++st.pivots;
        changed = true;
        break;
      }
    }
  }
  return changed;
}

bool copy_pass(Diagram& d, Trace trace, SimpStats& st) {
  bool changed = false;
  for (VertexId u : d.vertex_ids()) {
    if (can_copy_state(d, u)) {
      copy_state(d, u, trace);
      ++st.state_copies;
      changed = true;
    }
  }
  return changed;
}
bool scalar_pass(Diagram& d, Trace trace, SimpStats& st) {
  bool changed = false;
  for (VertexId v : d.vertex_ids()) {
    if (is_scalar_component(d, v)) {
      remove_scalar_component(d, v, trace);
      ++st.scalar_removals;
      changed = true;
    }
  }
  return changed;
}

bool gadget_pass(Diagram& d, Trace trace, SimpStats& st) {
  bool changed = false;
  std::map<std::vector<VertexId>, Gadget> seen;
  for (VertexId t : d.vertex_ids()) {
    if (!d.contains(t)) continue;
    const auto g = gadget_with_top(d, t);
    if (!g) continue;
    if (d.num_neighbours(g->base) == 2) {
      VertexId w = Diagram::kNoVertex;
      for (const Adjacent& a : d.neighbours(g->base)) {
        if (a.v != t) w = a.v;
      }
      if (d.kind(w) == VertexKind::Z && clean_spider(d, g->base)) {
        id_gadget_fuse(d, *g, trace);
        ++st.id_removals;
        changed = true;
        continue;
      }
    }
    auto key = sorted_neighbours(d, g->base);
    std::erase(key, t);
    const auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(std::move(key), *g);
      continue;
    }
    const auto survivor = gadget_with_top(d, it->second.top);
    if (!survivor || survivor->base != it->second.base) {
      it->second = *g;
      continue;
    }
    gadget_fuse(d, it->second, *g, trace);
    ++st.gadget_fusions;
    changed = true;
    if (!gadget_with_top(d, it->second.top)) seen.erase(it);
  }
  return changed;
}

bool pivot_gadget_pass(Diagram& d, Trace trace, SimpStats& st) {
  bool changed = false;
  for (VertexId u : d.vertex_ids()) {
    if (!pivot_gadget_u(d, u)) continue;
    for (VertexId v : sorted_neighbours(d, u)) {
      if (pivot_gadget_v(d, v, u)) {
        pivot_gadget(d, u, v, trace);
        ++st.pivot_gadgets;
        changed = true;
        break;
      }
    }
  }
  return changed;
}

void clifford_loop(Diagram& d, Trace trace, SimpStats& st) {
  for (;;) {
    bool changed = identity_pass(d, trace, st);
    changed |= local_comp_pass(d, trace, st);
    changed |= pivot_pass(d, trace, st);
    changed |= copy_pass(d, trace, st);
    changed |= scalar_pass(d, trace, st);
    if (!changed || d.scalar().is_zero()) return;
  }
}

}  // namespace

// A closed diagram with a zero scalar is zero whatever its spiders are.
void clear_if_zero(Diagram& d, Trace trace, SimpStats& st) {
  if (!d.scalar().is_zero() || !d.inputs().empty() || !d.outputs().empty()) return;
  const std::vector<VertexId> vs = d.vertex_ids();
  if (vs.empty()) return;
  for (VertexId v : vs) d.remove_vertex(v);
  ++st.scalar_removals;
  log(trace, Rule::ScalarRemoval, vs, Scalar::one());
}

SimpStats clifford_simp(Diagram& d, Trace trace) {
  SimpStats st;
  to_graph_like(d, trace);
  clifford_loop(d, trace, st);
  clear_if_zero(d, trace, st);
  return st;
}

SimpStats full_simp(Diagram& d, Trace trace) {
  SimpStats st;
  to_graph_like(d, trace);
  for (;;) {
    ++st.rounds;
    clifford_loop(d, trace, st);
    if (d.scalar().is_zero()) {
      clear_if_zero(d, trace, st);
      return st;
    }
    bool changed = gadget_pass(d, trace, st);
    changed |= pivot_gadget_pass(d, trace, st);
    if (!changed) return st;
  }
}

}  // namespace zxsim
