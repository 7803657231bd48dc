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

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "zxsim/scalar.hpp"

namespace zxsim {

using VertexId = std::uint32_t;

enum class VertexKind : std::uint8_t { BoundaryIn, BoundaryOut, Z, X, HBox };
enum class EdgeKind : std::uint8_t { Simple, Hadamard };

inline EdgeKind toggled(EdgeKind k) {
  return k == EdgeKind::Simple ? EdgeKind::Hadamard : EdgeKind::Simple;
}

/// A phase m * pi/4 with m taken mod 8.
class Phase {
 public:
  constexpr Phase() = default;
  constexpr explicit Phase(int m) : m_(static_cast<std::uint8_t>(((m % 8) + 8) % 8)) {}

  constexpr int m() const { return m_; }
  constexpr bool is_zero() const { return m_ == 0; }
  /// Multiple of pi/2.
  constexpr bool is_clifford() const { return m_ % 2 == 0; }
  /// 0 or pi.
  constexpr bool is_pauli() const { return m_ % 4 == 0; }
  /// +-pi/2.
  constexpr bool is_proper_clifford() const { return m_ == 2 || m_ == 6; }
  /// Odd multiple of pi/4.
  constexpr bool is_t_like() const { return m_ % 2 == 1; }

  constexpr Phase operator+(Phase o) const { return Phase(m_ + o.m_); }
  constexpr Phase operator-(Phase o) const { return Phase(m_ - o.m_); }
  constexpr Phase operator-() const { return Phase(-m_); }
  constexpr bool operator==(const Phase&) const = default;

  static constexpr Phase pi() { return Phase(4); }

 private:
  std::uint8_t m_ = 0;
};

/// Multiplicities of the edges joining one vertex pair.
struct EdgeCount {
  std::uint16_t simple = 0;
  std::uint16_t hadamard = 0;

  int total() const { return simple + hadamard; }
  std::uint16_t& of(EdgeKind k) { return k == EdgeKind::Simple ? simple : hadamard; }
  std::uint16_t of(EdgeKind k) const { return k == EdgeKind::Simple ? simple : hadamard; }
  bool operator==(const EdgeCount&) const = default;
};

struct Adjacent {
  VertexId v;
  EdgeCount edges;
};

/**
 * Undirected ZX multigraph with ordered boundaries and a global Scalar.
 *
 * Edges between a vertex pair are stored as multiplicities per kind on both
 * endpoints; a self-loop is stored once, in the vertex's own list. Inserting
 * an edge never rewrites anything. Vertex ids are never reused.
 */
class Diagram {
 public:
  Diagram() = default;

  VertexId add_vertex(VertexKind kind, Phase phase = Phase());
  /// Adds a vertex with edges to existing vertices; unknown ids throw ConstructionError.
  VertexId add_spider(VertexKind kind, Phase phase,
                      std::span<const std::pair<VertexId, EdgeKind>> neighbours = {});
  /// Recreates a vertex with a specific id (used by deserialisation).
  void add_vertex_with_id(VertexId id, VertexKind kind, Phase phase);
  VertexId add_input();
  VertexId add_output();

  void add_edge(VertexId u, VertexId v, EdgeKind kind, int count = 1);
  /// Removes every edge between u and v.
  void remove_edges(VertexId u, VertexId v);
  /// Removes `count` edges of `kind` between u and v.
  void remove_edge(VertexId u, VertexId v, EdgeKind kind, int count = 1);
  void remove_vertex(VertexId v);

  bool contains(VertexId v) const { return v < slots_.size() && slots_[v].alive; }
  VertexKind kind(VertexId v) const { return slot(v).kind; }
  Phase phase(VertexId v) const { return slot(v).phase; }
  void set_kind(VertexId v, VertexKind k) { slot(v).kind = k; }
  void set_phase(VertexId v, Phase p) { slot(v).phase = p; }
  void add_to_phase(VertexId v, Phase p) { slot(v).phase = slot(v).phase + p; }

  bool is_boundary(VertexId v) const {
    const auto k = kind(v);
    return k == VertexKind::BoundaryIn || k == VertexKind::BoundaryOut;
  }
  bool is_spider(VertexId v) const { return kind(v) == VertexKind::Z || kind(v) == VertexKind::X; }

  std::span<const Adjacent> neighbours(VertexId v) const { return slot(v).adj; }
  EdgeCount edge(VertexId u, VertexId v) const;
  bool connected(VertexId u, VertexId v) const { return edge(u, v).total() > 0; }
  /// Number of distinct neighbours, a self-loop included once.
  std::size_t num_neighbours(VertexId v) const { return slot(v).adj.size(); }
  /// Number of edge ends at v; a self-loop counts twice.
  std::size_t degree(VertexId v) const;

  std::vector<VertexId> vertex_ids() const;
  /// One past the largest id ever issued.
  VertexId id_bound() const { return static_cast<VertexId>(slots_.size()); }
  std::size_t num_vertices() const { return num_alive_; }
  std::size_t num_edges() const;
  /// Number of Z/X spiders whose phase is an odd multiple of pi/4.
  std::size_t t_count() const;
  std::size_t num_spiders() const;

  const std::vector<VertexId>& inputs() const { return inputs_; }
  const std::vector<VertexId>& outputs() const { return outputs_; }
  std::vector<VertexId>& inputs() { return inputs_; }
  std::vector<VertexId>& outputs() { return outputs_; }

  const Scalar& scalar() const { return scalar_; }
  Scalar& scalar() { return scalar_; }

  /**
   * Copies `other` into this diagram with fresh ids and returns the id map
   * (indexed by old id, unused entries hold the invalid id). With
   * `conjugate`, phases are negated and the scalar conjugated, which is
   * the adjoint up to the (undirected) reversal of boundaries. Boundary
   * lists of `other` are not appended.
   */
  std::vector<VertexId> append(const Diagram& other, bool conjugate);

  /// The same diagram with ids renumbered 0..n-1 in their current order;
  /// drops the storage of removed vertices.
  Diagram compacted() const;

  static constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

 private:
  struct Slot {
    bool alive = false;
    VertexKind kind = VertexKind::Z;
    Phase phase;
    std::vector<Adjacent> adj;
  };

  Slot& slot(VertexId v);
  const Slot& slot(VertexId v) const;
  EdgeCount* find_edge(VertexId u, VertexId v);
  void erase_adjacent(VertexId u, VertexId v);

  std::vector<Slot> slots_;
  std::size_t num_alive_ = 0;
  std::vector<VertexId> inputs_;
  std::vector<VertexId> outputs_;
  Scalar scalar_ = Scalar::one();
};

/// Basis states and effects that can be plugged into a boundary.
enum class BasisState : std::uint8_t { Zero, One, Plus };

/**
 * Replaces each assigned boundary by the spider encoding of the state or
 * effect: |0> is an X spider with phase 0, |1> an X spider with phase pi,
 * |+> a Z spider with phase 0, each carrying a 1/sqrt2 factor. Unknown
 * boundaries throw ConstructionError.
 */
void plug(Diagram& d, const std::map<VertexId, BasisState>& assignments);

/// Plugs inputs/outputs by position.
void plug_inputs(Diagram& d, std::span<const BasisState> states);
void plug_outputs(Diagram& d, std::span<const BasisState> effects);

/**
 * Builds the closed diagram for <0..0| U^dag (P (x) I) U |0..0>. `d` must
 * have no inputs; `fixed` maps output positions to the projected bit.
 * Fixed outputs receive the corresponding effect on both copies, the
 * remaining outputs are joined to their mirror image in the adjoint copy.
 */
Diagram double_diagram(const Diagram& d, const std::map<std::size_t, int>& fixed);

}  // namespace zxsim
