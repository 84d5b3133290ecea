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

#include "nearviz/coloring.hpp"

#include <stdexcept>
#include <string>

namespace nearviz {

PartialColoring::PartialColoring(const Graph& graph, Color q)
    : graph_(&graph), q_(q) {
  if (q < 1) throw std::invalid_argument("palette size must be at least 1");
  colors_.assign(graph.num_edges(), kBlank);
  missing_.assign(graph.num_vertices() * static_cast<std::size_t>(q), kNoEdge);
  colored_degree_.assign(graph.num_vertices(), 0);
}

std::optional<Vertex> PartialColoring::missing_lookup(Vertex x,
                                                      Color a) const {
  const EdgeId e = edge_with_color(x, a);
  if (e == kNoEdge) return std::nullopt;
  return graph_->other(e, x);
}

void PartialColoring::set_color(EdgeId e, Color a) {
  if (e >= colors_.size()) {
    throw std::invalid_argument("edge id " + std::to_string(e) +
                                " out of range");
  }
  if (colors_[e] != kBlank) {
    throw std::invalid_argument("edge " + std::to_string(e) +
                                " is already colored");
  }
  if (a < 1 || a > q_) {
    throw std::invalid_argument("color " + std::to_string(a) +
                                " outside palette [1," + std::to_string(q_) +
                                "]");
  }
  const auto [u, v] = graph_->edge(e);
  if (!is_missing(u, a) || !is_missing(v, a)) {
    throw std::invalid_argument("color " + std::to_string(a) +
                                " is not missing at both endpoints of edge " +
                                std::to_string(e));
  }
  colors_[e] = a;
  missing_[slot(u, a)] = e;
  missing_[slot(v, a)] = e;
  ++colored_degree_[u];
  ++colored_degree_[v];
  ++colored_;
  ++version_;
}

void PartialColoring::unset_color(EdgeId e) {
  if (e >= colors_.size()) {
    throw std::invalid_argument("edge id " + std::to_string(e) +
                                " out of range");
  }
  const Color a = colors_[e];
  if (a == kBlank) {
    throw std::invalid_argument("edge " + std::to_string(e) + " is blank");
  }
  const auto [u, v] = graph_->edge(e);
  colors_[e] = kBlank;
  missing_[slot(u, a)] = kNoEdge;
  missing_[slot(v, a)] = kNoEdge;
  --colored_degree_[u];
  --colored_degree_[v];
  --colored_;
  ++version_;
}

bool PartialColoring::index_consistent() const {
  std::vector<EdgeId> rebuilt(missing_.size(), kNoEdge);
  for (EdgeId e = 0; e < colors_.size(); ++e) {
    const Color a = colors_[e];
    if (a == kBlank) continue;
    const auto [u, v] = graph_->edge(e);
    for (Vertex w : {u, v}) {
      EdgeId& cell = rebuilt[slot(w, a)];
      if (cell != kNoEdge) return false;
      cell = e;
    }
  }
  return rebuilt == missing_;
}

}  // namespace nearviz
