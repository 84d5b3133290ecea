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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nearviz/graph.hpp"
#include "nearviz/types.hpp"

namespace nearviz {

/// Proper partial edge coloring with palette [q] and an O(1) missing-color
/// index.
///
/// For every vertex x and color a the index stores the edge at x colored a,
/// or nothing. That is the q-element per-vertex array from which both the
/// neighbor and the edge id are recovered in constant time. Memory is
/// Theta(n * q).
///
/// The coloring keeps a non-owning pointer to its graph; the graph must
/// outlive it. Every mutation bumps `version()`, which chain construction
/// uses to detect stale chains.
class PartialColoring {
 public:
  /// Throws std::invalid_argument if q < 1.
  PartialColoring(const Graph& graph, Color q);

  const Graph& graph() const noexcept { return *graph_; }
  Color palette_size() const noexcept { return q_; }

  Color color_of(EdgeId e) const noexcept { return colors_[e]; }
  bool is_blank(EdgeId e) const noexcept { return colors_[e] == kBlank; }
  std::span<const Color> colors() const noexcept { return colors_; }

  /// Edge at x colored a, or kNoEdge. a must be in [1, q].
  EdgeId edge_with_color(Vertex x, Color a) const noexcept {
    return missing_[slot(x, a)];
  }
  /// Neighbor y with color(xy) == a, or nullopt when a is missing at x.
  std::optional<Vertex> missing_lookup(Vertex x, Color a) const;
  bool is_missing(Vertex x, Color a) const noexcept {
    return missing_[slot(x, a)] == kNoEdge;
  }

  /// Colors blank edge e with a. Throws std::invalid_argument if e is
  /// already colored, a is outside [1, q], or a is used at an endpoint.
  void set_color(EdgeId e, Color a);
  /// Throws std::invalid_argument if e is blank.
  void unset_color(EdgeId e);

  std::size_t colored_count() const noexcept { return colored_; }
  std::size_t colored_degree(Vertex x) const noexcept {
    return colored_degree_[x];
  }
  std::uint64_t version() const noexcept { return version_; }

  /// Rebuilds the missing index from the edge colors and compares it with
  /// the maintained one.
  bool index_consistent() const;

 private:
  std::size_t slot(Vertex x, Color a) const noexcept {
    return static_cast<std::size_t>(x) * q_ + (a - 1);
  }

  const Graph* graph_;
  Color q_;
  std::vector<Color> colors_;
  std::vector<EdgeId> missing_;
  std::vector<std::uint32_t> colored_degree_;
  std::size_t colored_ = 0;
  std::uint64_t version_ = 0;
};

}  // namespace nearviz
