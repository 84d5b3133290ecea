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

#include "nearviz/coloring.hpp"
#include "nearviz/graph.hpp"
#include "nearviz/rng.hpp"

namespace nearviz {

struct GreedyReport {
  std::uint64_t attempts_total = 0;
  std::uint64_t attempts_max_per_edge = 0;
  std::size_t colors_used = 0;
};

/// Raised when one edge exceeds the rejection-sampling attempt cap.
class GreedyCapExceeded : public std::runtime_error {
 public:
  GreedyCapExceeded(EdgeId edge, std::uint64_t cap);
  EdgeId edge() const noexcept { return edge_; }

 private:
  EdgeId edge_;
};

struct GreedyResult {
  PartialColoring coloring;
  GreedyReport report;
};

/// Per-edge attempt cap: ceil(10 * q * ln(max(n, 2))).
std::uint64_t greedy_attempt_cap(std::size_t n, Color q);

/// Colors every edge, in edge-id order, by drawing colors uniformly from
/// [q] until one is missing at both endpoints.
///
/// Requires q >= 2*Delta - 1 (when the graph has edges) so that a valid
/// color always exists; `force` waives the check and relies on the attempt
/// cap instead.
GreedyResult greedy_color(const Graph& g, Color q, Rng& rng,
                          bool force = false);

}  // namespace nearviz
