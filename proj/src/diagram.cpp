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

#include "zxsim/diagram.hpp"

#include <algorithm>
#include <string>

#include "zxsim/errors.hpp"

namespace zxsim {

Diagram::Slot& Diagram::slot(VertexId v) {
  if (!contains(v)) throw ConstructionError("unknown vertex id " + std::to_string(v));
  return slots_[v];
}

const Diagram::Slot& Diagram::slot(VertexId v) const {
  if (!contains(v)) throw ConstructionError("unknown vertex id " + std::to_string(v));
  return slots_[v];
}

VertexId Diagram::add_vertex(VertexKind kind, Phase phase) {
  const auto id = static_cast<VertexId>(slots_.size());
  slots_.push_back(Slot{true, kind, phase, {}});
  ++num_alive_;
  return id;
}

void Diagram::add_vertex_with_id(VertexId id, VertexKind kind, Phase phase) {
  if (id == kNoVertex) throw ConstructionError("reserved vertex id");
  if (id < slots_.size() && slots_[id].alive) {
    throw ConstructionError("duplicate vertex id " + std::to_string(id));
  }
  if (id >= slots_.size()) slots_.resize(static_cast<std::size_t>(id) + 1);
  slots_[id] = Slot{true, kind, phase, {}};
  ++num_alive_;
}

VertexId Diagram::add_spider(VertexKind kind, Phase phase,
                             std::span<const std::pair<VertexId, EdgeKind>> neighbours) {
  for (const auto& [n, k] : neighbours) {
    if (!contains(n)) throw ConstructionError("unknown neighbour id " + std::to_string(n));
  }
  const VertexId v = add_vertex(kind, phase);
  for (const auto& [n, k] : neighbours) add_edge(v, n, k);
  return v;
}

VertexId Diagram::add_input() {
  const VertexId v = add_vertex(VertexKind::BoundaryIn);
  inputs_.push_back(v);
  return v;
}

VertexId Diagram::add_output() {
  const VertexId v = add_vertex(VertexKind::BoundaryOut);
  outputs_.push_back(v);
  return v;
}

EdgeCount* Diagram::find_edge(VertexId u, VertexId v) {
  for (auto& a : slot(u).adj) {
    if (a.v == v) return &a.edges;
  }
  return nullptr;
}

EdgeCount Diagram::edge(VertexId u, VertexId v) const {
  for (const auto& a : slot(u).adj) {
    if (a.v == v) return a.edges;
  }
  if (!contains(v)) throw ConstructionError("unknown vertex id " + std::to_string(v));
  return {};
}

void Diagram::add_edge(VertexId u, VertexId v, EdgeKind kind, int count) {
  if (count <= 0) return;
  if (!contains(v)) throw ConstructionError("unknown vertex id " + std::to_string(v));
  const auto c = static_cast<std::uint16_t>(count);
  if (EdgeCount* e = find_edge(u, v)) {
    e->of(kind) += c;
    if (u != v) find_edge(v, u)->of(kind) += c;
    return;
  }
  EdgeCount e;
  e.of(kind) = c;
  slot(u).adj.push_back({v, e});
  if (u != v) slot(v).adj.push_back({u, e});
}

void Diagram::erase_adjacent(VertexId u, VertexId v) {
  auto& adj = slot(u).adj;
  adj.erase(std::find_if(adj.begin(), adj.end(), [v](const Adjacent& a) { return a.v == v; }));
}

void Diagram::remove_edges(VertexId u, VertexId v) {
  if (!find_edge(u, v)) return;
  erase_adjacent(u, v);
  if (u != v) erase_adjacent(v, u);
}

void Diagram::remove_edge(VertexId u, VertexId v, EdgeKind kind, int count) {
  EdgeCount* e = find_edge(u, v);
  if (!e || e->of(kind) < count) throw ConstructionError("removing a missing edge");
  e->of(kind) = static_cast<std::uint16_t>(e->of(kind) - count);
  if (u != v) find_edge(v, u)->of(kind) = e->of(kind);
  if (e->total() == 0) remove_edges(u, v);
}

void Diagram::remove_vertex(VertexId v) {
  auto& s = slot(v);
  for (const auto& a : s.adj) {
    if (a.v != v) erase_adjacent(a.v, v);
  }
  s.adj.clear();
  s.adj.shrink_to_fit();
  s.alive = false;
  --num_alive_;
  std::erase(inputs_, v);
  std::erase(outputs_, v);
}

std::size_t Diagram::degree(VertexId v) const {
  std::size_t d = 0;
  for (const auto& a : slot(v).adj) d += static_cast<std::size_t>(a.edges.total()) * (a.v == v ? 2 : 1);
  return d;
}

std::vector<VertexId> Diagram::vertex_ids() const {
  std::vector<VertexId> out;
  out.reserve(num_alive_);
  for (VertexId v = 0; v < slots_.size(); ++v) {
    if (slots_[v].alive) out.push_back(v);
  }
  return out;
}

std::size_t Diagram::num_edges() const {
  std::size_t twice = 0;
  for (VertexId v = 0; v < slots_.size(); ++v) {
    if (!slots_[v].alive) continue;
    for (const auto& a : slots_[v].adj) twice += static_cast<std::size_t>(a.edges.total()) * (a.v == v ? 2 : 1);
  }
  return twice / 2;
}

std::size_t Diagram::t_count() const {
  std::size_t n = 0;
  for (const auto& s : slots_) {
    if (s.alive && (s.kind == VertexKind::Z || s.kind == VertexKind::X) && s.phase.is_t_like()) ++n;
  }
  return n;
}

std::size_t Diagram::num_spiders() const {
  std::size_t n = 0;
  for (const auto& s : slots_) {
    if (s.alive && (s.kind == VertexKind::Z || s.kind == VertexKind::X)) ++n;
  }
  return n;
}

std::vector<VertexId> Diagram::append(const Diagram& other, bool conjugate) {
  std::vector<VertexId> map(other.slots_.size(), kNoVertex);
  for (VertexId v = 0; v < other.slots_.size(); ++v) {
    const auto& s = other.slots_[v];
    if (s.alive) map[v] = add_vertex(s.kind, conjugate ? -s.phase : s.phase);
  }
  for (VertexId v = 0; v < other.slots_.size(); ++v) {
    const auto& s = other.slots_[v];
    if (!s.alive) continue;
    for (const auto& a : s.adj) {
      if (a.v < v) continue;
      add_edge(map[v], map[a.v], EdgeKind::Simple, a.edges.simple);
      add_edge(map[v], map[a.v], EdgeKind::Hadamard, a.edges.hadamard);
    }
  }
  scalar_ *= conjugate ? other.scalar_.conj() : other.scalar_;
  return map;
}

Diagram Diagram::compacted() const {
  Diagram out;
  out.slots_.reserve(num_alive_);
  const std::vector<VertexId> map = out.append(*this, false);
  out.scalar_ = scalar_;
  for (VertexId b : inputs_) out.inputs_.push_back(map[b]);
  for (VertexId b : outputs_) out.outputs_.push_back(map[b]);
  return out;
}

void plug(Diagram& d, const std::map<VertexId, BasisState>& assignments) {
  for (const auto& [b, state] : assignments) {
    if (!d.contains(b) || !d.is_boundary(b)) {
      throw ConstructionError("plug target " + std::to_string(b) + " is not a boundary");
    }
    switch (state) {
      case BasisState::Zero:
        d.set_kind(b, VertexKind::X);
        d.set_phase(b, Phase(0));
        break;
      case BasisState::One:
        d.set_kind(b, VertexKind::X);
        d.set_phase(b, Phase::pi());
        break;
      case BasisState::Plus:
        d.set_kind(b, VertexKind::Z);
        d.set_phase(b, Phase(0));
        break;
    }
    d.scalar().mul_sqrt2_power(-1);
    std::erase(d.inputs(), b);
    std::erase(d.outputs(), b);
  }
}

void plug_inputs(Diagram& d, std::span<const BasisState> states) {
  if (states.size() != d.inputs().size()) throw ConstructionError("input count mismatch");
  std::map<VertexId, BasisState> a;
  for (std::size_t i = 0; i < states.size(); ++i) a[d.inputs()[i]] = states[i];
  plug(d, a);
}

void plug_outputs(Diagram& d, std::span<const BasisState> effects) {
  if (effects.size() != d.outputs().size()) throw ConstructionError("output count mismatch");
  std::map<VertexId, BasisState> a;
  for (std::size_t i = 0; i < effects.size(); ++i) a[d.outputs()[i]] = effects[i];
  plug(d, a);
}

Diagram double_diagram(const Diagram& d, const std::map<std::size_t, int>& fixed) {
  if (!d.inputs().empty()) throw ConstructionError("doubling needs a diagram with plugged inputs");
  for (const auto& [pos, bit] : fixed) {
    if (pos >= d.outputs().size()) throw ConstructionError("fixed output out of range");
    if (bit != 0 && bit != 1) throw ConstructionError("fixed output bit must be 0 or 1");
  }
  Diagram out = d;
  const auto mirror = out.append(d, true);
  std::map<VertexId, BasisState> plugs;
  for (std::size_t j = 0; j < d.outputs().size(); ++j) {
    const VertexId o = d.outputs()[j];
    const VertexId m = mirror[o];
    const auto it = fixed.find(j);
    if (it != fixed.end()) {
      const auto s = it->second ? BasisState::One : BasisState::Zero;
      plugs[o] = s;
      plugs[m] = s;
      continue;
    }
    // Splice the two wire ends together through the output pair.
    const Adjacent a = out.neighbours(o)[0];
    const Adjacent b = out.neighbours(m)[0];
    const EdgeKind ka = a.edges.hadamard ? EdgeKind::Hadamard : EdgeKind::Simple;
    const EdgeKind kb = b.edges.hadamard ? EdgeKind::Hadamard : EdgeKind::Simple;
    out.remove_vertex(o);
    out.remove_vertex(m);
    out.add_edge(a.v, b.v, ka == kb ? EdgeKind::Simple : EdgeKind::Hadamard);
  }
  // Mirror boundaries were never registered; plug() only needs them to be boundary vertices.
  plug(out, plugs);
  out.outputs().clear();
  return out;
}

}  // namespace zxsim
