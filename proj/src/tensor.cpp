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

#include "zxsim/tensor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zxsim/errors.hpp"

namespace zxsim {

namespace {

using cd = std::complex<double>;

// Dense tensor with one binary index per label; labels[0] is the most
// significant bit of the flat position.
struct Dense {
  std::vector<int> labels;
  std::vector<cd> data;
};

cd omega_pow(int m) {
  const double a = std::numbers::pi / 4 * m;
  return {std::cos(a), std::sin(a)};
}

std::size_t bit_of(std::size_t flat, std::size_t rank, std::size_t j) { return (flat >> (rank - 1 - j)) & 1U; }

Dense z_spider(std::vector<int> labels, int m) {
  const std::size_t n = labels.size();
  Dense t{std::move(labels), std::vector<cd>(std::size_t{1} << n)};
  if (n == 0) {
    t.data[0] = 1.0 + omega_pow(m);
  } else {
    t.data.front() += 1.0;
    t.data.back() += omega_pow(m);
  }
  return t;
}

Dense x_spider(std::vector<int> labels, int m) {
  const std::size_t n = labels.size();
  Dense t{std::move(labels), std::vector<cd>(std::size_t{1} << n)};
  const double norm = std::pow(std::numbers::sqrt2, -static_cast<double>(n));
  const cd w = omega_pow(m);
  for (std::size_t x = 0; x < t.data.size(); ++x) {
    const double sign = (std::popcount(x) % 2 == 0) ? 1.0 : -1.0;
    t.data[x] = norm * (1.0 + w * sign);
  }
  return t;
}

Dense hadamard(int a, int b) {
  const double h = 1.0 / std::numbers::sqrt2;
  return Dense{{a, b}, {h, h, h, -h}};
}

Dense identity(int a, int b) { return Dense{{a, b}, {1.0, 0.0, 0.0, 1.0}}; }

Dense contract(const Dense& x, const Dense& y) {
  std::vector<int> shared;
  std::vector<int> free_labels;
  for (int l : x.labels) {
    if (std::find(y.labels.begin(), y.labels.end(), l) != y.labels.end()) {
      shared.push_back(l);
    } else {
      free_labels.push_back(l);
    }
  }
  for (int l : y.labels) {
    if (std::find(shared.begin(), shared.end(), l) == shared.end()) free_labels.push_back(l);
  }
  // Combined loop index: free labels (high bits) then shared labels.
  std::vector<int> all = free_labels;
  all.insert(all.end(), shared.begin(), shared.end());
  const std::size_t n = all.size();
  std::vector<std::size_t> wx(n, 0), wy(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const auto px = std::find(x.labels.begin(), x.labels.end(), all[j]);
    if (px != x.labels.end()) wx[j] = std::size_t{1} << (x.labels.size() - 1 - static_cast<std::size_t>(px - x.labels.begin()));
    const auto py = std::find(y.labels.begin(), y.labels.end(), all[j]);
    if (py != y.labels.end()) wy[j] = std::size_t{1} << (y.labels.size() - 1 - static_cast<std::size_t>(py - y.labels.begin()));
  }
  Dense out{free_labels, std::vector<cd>(std::size_t{1} << free_labels.size())};
  const std::size_t ns = shared.size();
  for (std::size_t c = 0; c < (std::size_t{1} << n); ++c) {
    std::size_t ix = 0, iy = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (bit_of(c, n, j)) {
        ix += wx[j];
        iy += wy[j];
      }
    }
    const cd& a = x.data[ix];
    if (a == cd(0.0, 0.0)) continue;
    out.data[c >> ns] += a * y.data[iy];
  }
  return out;
}

std::size_t union_size(const Dense& x, const Dense& y, bool* shares) {
  std::size_t common = 0;
  for (int l : x.labels) common += std::count(y.labels.begin(), y.labels.end(), l);
  *shares = common > 0;
  return x.labels.size() + y.labels.size() - common;
}

}  // namespace

std::vector<cd> tensor(const Diagram& d, const TensorLimits& limits) {
  const std::size_t boundaries = d.inputs().size() + d.outputs().size();
  if (d.num_spiders() > limits.max_spiders) {
    throw OracleRefused("tensor oracle: " + std::to_string(d.num_spiders()) + " spiders exceeds cap " +
                        std::to_string(limits.max_spiders));
  }
  if (boundaries > limits.max_boundaries) {
    throw OracleRefused("tensor oracle: too many boundaries");
  }

  int next_label = 0;
  std::vector<int> external;  // label of each boundary index, inputs then outputs
  std::vector<std::vector<int>> legs(d.id_bound());
  std::vector<Dense> pool;

  for (VertexId v : d.vertex_ids()) {
    for (const Adjacent& a : d.neighbours(v)) {
      if (a.v < v) continue;
      for (int kind = 0; kind < 2; ++kind) {
        const int count = kind == 0 ? a.edges.simple : a.edges.hadamard;
        for (int i = 0; i < count; ++i) {
          const int lu = next_label++;
          const int lv = next_label++;
          legs[v].push_back(lu);
          legs[a.v].push_back(lv);
          pool.push_back(kind == 0 ? identity(lu, lv) : hadamard(lu, lv));
        }
      }
    }
  }

  std::vector<int> boundary_label(d.id_bound(), -1);
  for (VertexId v : d.vertex_ids()) {
    switch (d.kind(v)) {
      case VertexKind::Z:
        pool.push_back(z_spider(legs[v], d.phase(v).m()));
        break;
      case VertexKind::X:
        pool.push_back(x_spider(legs[v], d.phase(v).m()));
        break;
      case VertexKind::HBox: {
        if (legs[v].size() != 2) throw ConstructionError("HBox must have arity 2");
        pool.push_back(hadamard(legs[v][0], legs[v][1]));
        break;
      }
      case VertexKind::BoundaryIn:
      case VertexKind::BoundaryOut: {
        if (legs[v].size() != 1) throw ConstructionError("boundary must have degree 1");
        const int ext = next_label++;
        boundary_label[v] = ext;
        pool.push_back(identity(legs[v][0], ext));
        break;
      }
    }
  }
  for (VertexId v : d.inputs()) external.push_back(boundary_label[v]);
  for (VertexId v : d.outputs()) external.push_back(boundary_label[v]);

  const cd scalar = d.scalar().to_complex();
  if (pool.empty()) return {scalar};

  while (pool.size() > 1) {
    std::size_t bi = 0, bj = 1, best = std::numeric_limits<std::size_t>::max();
    bool best_shares = false;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        bool shares = false;
        const std::size_t u = union_size(pool[i], pool[j], &shares);
        if ((shares && !best_shares) || (shares == best_shares && u < best)) {
          best = u;
          best_shares = shares;
          bi = i;
          bj = j;
        }
      }
    }
    Dense c = contract(pool[bi], pool[bj]);
    pool.erase(pool.begin() + static_cast<long>(bj));
    pool[bi] = std::move(c);
  }

  // Permute to the external order.
  const Dense& t = pool.front();
  const std::size_t r = external.size();
  std::vector<std::size_t> pos(r);
  for (std::size_t j = 0; j < r; ++j) {
    pos[j] = static_cast<std::size_t>(std::find(t.labels.begin(), t.labels.end(), external[j]) - t.labels.begin());
  }
  std::vector<cd> out(std::size_t{1} << r);
  for (std::size_t f = 0; f < out.size(); ++f) {
    std::size_t src = 0;
    for (std::size_t j = 0; j < r; ++j) {
      if (bit_of(f, r, j)) src |= std::size_t{1} << (r - 1 - pos[j]);
    }
    out[f] = scalar * t.data[src];
  }
  return out;
}

double max_abs_diff(const std::vector<cd>& x, const std::vector<cd>& y) {
  if (x.size() != y.size()) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

}  // namespace zxsim
