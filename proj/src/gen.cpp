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

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "nearviz/gen_io.hpp"

namespace nearviz {
namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Simple edge set supporting O(1) membership and uniform edge choice.
class EdgeSet {
 public:
  bool contains(Vertex a, Vertex b) const {
    return index_.count(pair_key(a, b)) != 0;
  }
  void add(Vertex a, Vertex b) {
    index_.emplace(pair_key(a, b), edges_.size());
    edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  void remove_at(std::size_t i) {
    index_.erase(pair_key(edges_[i].u, edges_[i].v));
    if (i + 1 != edges_.size()) {
      edges_[i] = edges_.back();
      index_[pair_key(edges_[i].u, edges_[i].v)] = i;
    }
    edges_.pop_back();
  }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.below(i)]);
  }
}

}  // namespace

Graph gen_gnp(std::size_t n, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.unit() < p) edges.push_back({u, v});
    }
  }
  return Graph::build(n, edges);
}

Graph gen_near_regular(std::size_t n, std::size_t d, Rng& rng) {
  if (d == 0) return Graph::build(n, std::span<const Edge>{});
  if (d >= n) throw std::invalid_argument("degree must be below n");
  if ((n * d) % 2 != 0) throw std::invalid_argument("n * d must be even");

  std::vector<Vertex> stubs;
  stubs.reserve(n * d);
  for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);

  EdgeSet set;
  // Re-pair rejected stubs while that keeps making progress.
  for (int round = 0; round < 64 && !stubs.empty(); ++round) {
    shuffle(stubs, rng);
    std::vector<Vertex> rejected;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      const Vertex a = stubs[i];
      const Vertex b = stubs[i + 1];
      if (a == b || set.contains(a, b)) {
        rejected.push_back(a);
        rejected.push_back(b);
      } else {
        set.add(a, b);
      }
    }
    const bool stalled = rejected.size() == stubs.size();
    stubs = std::move(rejected);
    if (stalled && round >= 8) break;
  }

  // Place each leftover stub pair (a, b) by switching out a random edge
  // (u, v) for (a, u) and (b, v); u and v keep their degrees.
  const std::size_t budget = 1000 * (stubs.size() / 2 + 1);
  std::size_t tries = 0;
  while (!stubs.empty()) {
    if (set.edges().empty() || ++tries > budget) {
      throw std::runtime_error("near-regular pairing did not converge for n=" +
                               std::to_string(n) + ", d=" + std::to_string(d));
    }
    const Vertex a = stubs[stubs.size() - 2];
    const Vertex b = stubs[stubs.size() - 1];
    const std::size_t i = rng.below(set.edges().size());
    Vertex u = set.edges()[i].u;
    Vertex v = set.edges()[i].v;
    if (rng.coin()) std::swap(u, v);
    if (a == u || a == v || b == u || b == v) continue;
    if (set.contains(a, u) || set.contains(b, v)) continue;
    set.remove_at(i);
    set.add(a, u);
    set.add(b, v);
    stubs.resize(stubs.size() - 2);
  }

  std::vector<Edge> edges = set.edges();
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return x.u != y.u ? x.u < y.u : x.v < y.v;
  });
  return Graph::build(n, edges);
}

}  // namespace nearviz
