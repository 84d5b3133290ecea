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

#include "nearviz/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace nearviz {

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  if (n > static_cast<std::size_t>(kNoVertex)) {
    throw std::invalid_argument("vertex count exceeds 32-bit id range");
  }
  if (edges.size() >= static_cast<std::size_t>(kNoEdge)) {
    throw std::invalid_argument("edge count exceeds 32-bit id range");
  }

  Graph g;
  g.n_ = n;
  g.edges_.assign(edges.begin(), edges.end());
  g.offsets_.assign(n + 1, 0);

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge " + std::to_string(i) + " (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ") has a vertex id out of range [0," +
                                  std::to_string(n) + ")");
    }
    if (u == v) {
      throw std::invalid_argument("edge " + std::to_string(i) +
                                  " is a self-loop at vertex " +
                                  std::to_string(u));
    }
    const std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                              std::max(u, v);
    if (!seen.insert(key).second) {
      throw std::invalid_argument("edge " + std::to_string(i) + " (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ") is a duplicate");
    }
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.max_degree_ = std::max(g.max_degree_, g.offsets_[v + 1]);
    g.offsets_[v + 1] += g.offsets_[v];
  }

  g.incidences_.resize(2 * edges.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [u, v] = edges[i];
    const auto id = static_cast<EdgeId>(i);
    g.incidences_[cursor[u]++] = {v, id};
    g.incidences_[cursor[v]++] = {u, id};
  }
  return g;
}

Graph Graph::build(std::size_t n,
                   std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> converted;
  converted.reserve(edges.size());
  for (const auto& [u, v] : edges) converted.push_back({u, v});
  return build(n, converted);
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return std::nullopt;
  if (degree(v) < degree(u)) std::swap(u, v);
  for (const Incidence& inc : neighbors(u)) {
    if (inc.neighbor == v) return inc.edge;
  }
  return std::nullopt;
}

}  // namespace nearviz
