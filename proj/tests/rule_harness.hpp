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

// Randomised soundness harness for the rewrite rules, shared by the unit
// tests and the acceptance binary.

#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "test_util.hpp"
#include "zxsim/errors.hpp"
#include "zxsim/simplify.hpp"
#include "zxsim/tensor.hpp"

namespace zxsim::testing {

inline const TensorLimits kRuleLimits{16, 10};

struct GraphLikeOptions {
  int min_spiders = 2;
  int max_spiders = 8;
  std::vector<int> phases = {0, 1, 2, 3, 4, 5, 6, 7};
  double edge_probability = 0.45;
  int max_boundaries = 2;
};

// Random graph-like diagram; boundaries attach to distinct spiders by simple edges.
inline Diagram random_graph_like(std::mt19937_64& rng, const GraphLikeOptions& o = {}) {
  Diagram d;
  const int n = uniform(rng, o.min_spiders, o.max_spiders);
  std::vector<VertexId> sp;
  for (int i = 0; i < n; ++i) {
    sp.push_back(d.add_vertex(VertexKind::Z, Phase(o.phases[static_cast<std::size_t>(
                                                 uniform(rng, 0, static_cast<int>(o.phases.size()) - 1))])));
  }
  std::bernoulli_distribution edge(o.edge_probability);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (edge(rng)) d.add_edge(sp[static_cast<std::size_t>(i)], sp[static_cast<std::size_t>(j)], EdgeKind::Hadamard);
    }
  }
  const int nb = std::min(uniform(rng, 0, o.max_boundaries), n);
  std::vector<VertexId> pool = sp;
  std::shuffle(pool.begin(), pool.end(), rng);
  for (int i = 0; i < nb; ++i) {
    const VertexId b = (i % 2 == 0) ? d.add_input() : d.add_output();
    d.add_edge(b, pool[static_cast<std::size_t>(i)], EdgeKind::Simple);
  }
  d.scalar() = Scalar::from_phase(uniform(rng, 0, 7));
  return d;
}

// Adds a gadget over `targets`; returns it.
inline Gadget add_gadget(Diagram& d, const std::vector<VertexId>& targets, int top, int base = 0) {
  const VertexId b = d.add_vertex(VertexKind::Z, Phase(base));
  for (VertexId t : targets) d.add_edge(b, t, EdgeKind::Hadamard);
  const VertexId t = d.add_vertex(VertexKind::Z, Phase(top));
  d.add_edge(b, t, EdgeKind::Hadamard);
  return {b, t};
}

inline std::vector<VertexId> random_subset(std::mt19937_64& rng, const std::vector<VertexId>& from, int min_size) {
  std::vector<VertexId> out;
  while (static_cast<int>(out.size()) < min_size) {
    out.clear();
    for (VertexId v : from) {
      if (uniform(rng, 0, 1)) out.push_back(v);
    }
  }
  return out;
}

inline std::vector<VertexId> spiders_of(const Diagram& d) {
  std::vector<VertexId> sp;
  for (VertexId v : d.vertex_ids()) {
    if (d.is_spider(v)) sp.push_back(v);
  }
  return sp;
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& xs) {
  return xs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(xs.size()) - 1))];
}

inline VertexId random_neighbour(const Diagram& d, VertexId v, std::mt19937_64& rng) {
  const auto n = d.neighbours(v);
  if (n.empty()) throw RuleNotApplicable("isolated");
  return n[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n.size()) - 1))].v;
}

inline std::vector<Gadget> structural_gadgets(const Diagram& d) {
  std::vector<Gadget> out;
  for (VertexId v : d.vertex_ids()) {
    if (const auto g = gadget_with_top(d, v, false)) out.push_back(*g);
  }
  return out;
}

inline Diagram two_gadget_host(std::mt19937_64& rng, bool same) {
  GraphLikeOptions o;
  o.max_spiders = 5;
  Diagram d = random_graph_like(rng, o);
  const auto sp = spiders_of(d);
  const auto s1 = random_subset(rng, sp, 1);
  const auto s2 = same ? s1 : random_subset(rng, sp, 1);
  add_gadget(d, s1, uniform(rng, 0, 7), 4 * uniform(rng, 0, 1));
  add_gadget(d, s2, uniform(rng, 0, 7), 4 * uniform(rng, 0, 1));
  return d;
}

struct RuleCase {
  std::string name;
  std::uint64_t seed;
  std::function<Diagram(std::mt19937_64&)> make;
  /// Applies the rule at a random site; throws RuleNotApplicable when it does not match.
  std::function<void(Diagram&, std::mt19937_64&)> apply;
};

inline std::vector<RuleCase> rule_cases() {
  std::vector<RuleCase> cases;
  auto graph = [](GraphLikeOptions o) { return [o](std::mt19937_64& r) { return random_graph_like(r, o); }; };

  GraphLikeOptions lc;
  lc.phases = {2, 6, 2, 6, 0, 1, 3, 4};
  cases.push_back({"local_comp", 1, graph(lc), [](Diagram& d, std::mt19937_64& r) {
                     local_comp(d, pick(r, spiders_of(d)));
                   }});

  GraphLikeOptions pv;
  pv.phases = {0, 4, 0, 4, 1, 2};
  pv.edge_probability = 0.55;
  cases.push_back({"pivot", 2, graph(pv), [](Diagram& d, std::mt19937_64& r) {
                     const VertexId u = pick(r, spiders_of(d));
                     pivot(d, u, random_neighbour(d, u, r));
                   }});

  GraphLikeOptions pg;
  pg.phases = {0, 4, 1, 3, 5, 7, 2};
  pg.edge_probability = 0.55;
  pg.max_spiders = 7;
  cases.push_back({"pivot_gadget", 3, graph(pg), [](Diagram& d, std::mt19937_64& r) {
                     const VertexId u = pick(r, spiders_of(d));
                     pivot_gadget(d, u, random_neighbour(d, u, r));
                   }});

  cases.push_back({"gadget_fuse", 4, [](std::mt19937_64& r) { return two_gadget_host(r, uniform(r, 0, 4) != 0); },
                   [](Diagram& d, std::mt19937_64& r) {
                     const auto gs = structural_gadgets(d);
                     if (gs.size() < 2) throw RuleNotApplicable("too few gadgets");
                     gadget_fuse(d, pick(r, gs), pick(r, gs));
                   }});

  cases.push_back({"id_gadget_fuse", 5,
                   [](std::mt19937_64& r) {
                     GraphLikeOptions o;
                     o.max_spiders = 6;
                     Diagram d = random_graph_like(r, o);
                     add_gadget(d, {pick(r, spiders_of(d))}, uniform(r, 0, 7), 4 * uniform(r, 0, 1));
                     return d;
                   },
                   [](Diagram& d, std::mt19937_64& r) {
                     const auto gs = structural_gadgets(d);
                     if (gs.empty()) throw RuleNotApplicable("no gadget");
                     id_gadget_fuse(d, pick(r, gs));
                   }});

  cases.push_back({"normalise_gadget", 6, [](std::mt19937_64& r) { return two_gadget_host(r, false); },
                   [](Diagram& d, std::mt19937_64& r) {
                     const auto gs = structural_gadgets(d);
                     if (gs.empty()) throw RuleNotApplicable("no gadget");
                     normalise_gadget(d, pick(r, gs));
                   }});

  GraphLikeOptions id;
  id.phases = {0, 0, 0, 1, 2, 4};
  id.edge_probability = 0.3;
  cases.push_back({"remove_identity", 7, graph(id), [](Diagram& d, std::mt19937_64& r) {
                     remove_identity(d, pick(r, spiders_of(d)));
                   }});

  GraphLikeOptions sc;
  sc.edge_probability = 0.12;
  sc.max_boundaries = 0;
  cases.push_back({"remove_scalar_component", 8, graph(sc), [](Diagram& d, std::mt19937_64& r) {
                     remove_scalar_component(d, pick(r, spiders_of(d)));
                   }});

  GraphLikeOptions cp;
  cp.phases = {0, 4, 0, 4, 1, 2, 3, 7};
  cp.edge_probability = 0.3;
  cases.push_back({"copy_state", 12, graph(cp), [](Diagram& d, std::mt19937_64& r) {
                     copy_state(d, pick(r, spiders_of(d)));
                   }});

  RandomDiagramOptions zo;
  zo.allow_x = false;
  zo.allow_hbox = false;
  auto z_diagram = [zo](std::mt19937_64& r) { return random_diagram(r, zo); };
  cases.push_back({"fuse", 9, z_diagram, [](Diagram& d, std::mt19937_64& r) {
                     const VertexId u = pick(r, spiders_of(d));
                     fuse(d, u, random_neighbour(d, u, r));
                   }});
  cases.push_back({"normalise_edges", 10, z_diagram, [](Diagram& d, std::mt19937_64& r) {
                     const VertexId u = pick(r, spiders_of(d));
                     bool parallel = d.edge(u, u).total() > 0;
                     for (const Adjacent& a : d.neighbours(u)) parallel |= a.v != u && a.edges.hadamard >= 2;
                     if (!parallel) throw RuleNotApplicable("nothing to normalise");
                     normalise_edges(d, u);
                   }});
  return cases;
}

struct SoundnessResult {
  int applied = 0;
  int tries = 0;
  std::size_t max_spiders = 0;
  double worst = 0.0;
};

// Applies the rule to fresh diagrams until `target` applications succeeded
// (or 200 * target attempts), comparing tensors before and after.
inline SoundnessResult run_soundness(const RuleCase& rc, int target) {
  std::mt19937_64 rng(rc.seed);
  SoundnessResult res;
  while (res.applied < target && res.tries < 200 * target) {
    ++res.tries;
    Diagram d = rc.make(rng);
    if (spiders_of(d).empty()) continue;
    Diagram after = d;
    try {
      rc.apply(after, rng);
    } catch (const RuleNotApplicable&) {
      continue;
    }
    ++res.applied;
    res.max_spiders = std::max(res.max_spiders, d.num_spiders());
    res.worst = std::max(res.worst, scaled_diff(tensor(d, kRuleLimits), tensor(after, kRuleLimits)));
  }
  return res;
}

}  // namespace zxsim::testing
