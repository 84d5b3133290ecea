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

#include "nearviz/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace nearviz {

GreedyCapExceeded::GreedyCapExceeded(EdgeId edge, std::uint64_t cap)
    : std::runtime_error("edge " + std::to_string(edge) +
                         " exceeded the greedy attempt cap of " +
                         std::to_string(cap)),
      edge_(edge) {}

std::uint64_t greedy_attempt_cap(std::size_t n, Color q) {
  const double logn = std::log(static_cast<double>(std::max<std::size_t>(n, 2)));
  return static_cast<std::uint64_t>(std::ceil(10.0 * q * logn));
}

GreedyResult greedy_color(const Graph& g, Color q, Rng& rng, bool force) {
  const std::size_t delta = g.max_degree();
  if (!force && g.num_edges() > 0 && q + 1 < 2 * delta) {
    throw std::invalid_argument(
        "palette of " + std::to_string(q) + " colors is below 2*Delta-1 = " +
        std::to_string(2 * delta - 1));
  }
  GreedyResult out{PartialColoring(g, q), {}};
  PartialColoring& c = out.coloring;
  const std::uint64_t cap = greedy_attempt_cap(g.num_vertices(), q);

  std::vector<bool> used(static_cast<std::size_t>(q) + 1, false);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    std::uint64_t attempts = 0;
    while (true) {
      if (attempts == cap) throw GreedyCapExceeded(e, cap);
      ++attempts;
      const auto a = static_cast<Color>(rng.one_to(q));
      if (c.is_missing(u, a) && c.is_missing(v, a)) {
        c.set_color(e, a);
        if (!used[a]) {
          used[a] = true;
          ++out.report.colors_used;
        }
        break;
      }
    }
    out.report.attempts_total += attempts;
    out.report.attempts_max_per_edge =
        std::max(out.report.attempts_max_per_edge, attempts);
  }
  return out;
}

}  // namespace nearviz
