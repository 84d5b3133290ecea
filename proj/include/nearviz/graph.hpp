// Copyright 2026 The nearviz Authors
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
#include <span>
#include <utility>
#include <vector>

#include "nearviz/types.hpp"

namespace nearviz {

struct Edge {
  Vertex u;
  Vertex v;

  bool operator==(const Edge&) const = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edge ids are dense and follow input order. Adjacency is stored in CSR form;
/// each vertex lists its incident edges in edge-id order.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on self-loops, duplicate edges (in either
  /// orientation) and out-of-range vertex ids.
  static Graph build(std::size_t n, std::span<const Edge> edges);
  static Graph build(std::size_t n,
                     std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t max_degree() const noexcept { return max_degree_; }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const Incidence> neighbors(Vertex v) const noexcept {
    return {incidences_.data() + offsets_[v],
            incidences_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }

  /// Endpoint of `e` opposite to `v`. `v` must be an endpoint of `e`.
  Vertex other(EdgeId e, Vertex v) const noexcept {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }

  bool has_endpoint(EdgeId e, Vertex v) const noexcept {
    const Edge& ed = edges_[e];
    return ed.u == v || ed.v == v;
  }

  /// O(min(deg u, deg v)) scan.
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

 private:
  std::size_t n_ = 0;
  std::size_t max_degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> incidences_;
};

}  // namespace nearviz
