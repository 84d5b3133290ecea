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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <vector>

#include "nearviz/greedy.hpp"
#include "nearviz/verify.hpp"
#include "test_support.hpp"

namespace nearviz {
namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

TEST(GreedyTest, SingleEdgeColorIsUniform) {
  const Graph g = Graph::build(2, Pairs{{0, 1}});
  std::array<int, 3> counts{};
  const int runs = 10000;
  for (int seed = 0; seed < runs; ++seed) {
    Rng rng(static_cast<std::uint64_t>(seed));
    const GreedyResult r = greedy_color(g, 3, rng);
    ASSERT_EQ(r.report.attempts_total, 1u);
    ++counts[r.coloring.color_of(0) - 1];
  }
  double chi2 = 0.0;
  const double expected = runs / 3.0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // Chi-square with 2 degrees of freedom, p = 0.001.
  EXPECT_LT(chi2, 13.816);
}

TEST(GreedyTest, TriangleGetsThreeDistinctColors) {
  const Graph g = Graph::build(3, Pairs{{0, 1}, {1, 2}, {0, 2}});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const GreedyResult r = greedy_color(g, 6, rng);
    EXPECT_FALSE(verify_proper(g, r.coloring, true).has_value());
    EXPECT_EQ(r.report.colors_used, 3u);
    EXPECT_LE(palette_report(r.coloring).max_color.value(), 6u);
  }
}

TEST(GreedyTest, EmptyGraph) {
  const Graph g = Graph::build(5, Pairs{});
  Rng rng(1);
  const GreedyResult r = greedy_color(g, 3, rng);
  EXPECT_EQ(r.report.attempts_total, 0u);
  EXPECT_EQ(r.report.colors_used, 0u);
  EXPECT_EQ(r.coloring.colored_count(), 0u);
}

TEST(GreedyTest, RejectsSmallPalette) {
  const Graph g = Graph::build(3, Pairs{{0, 1}, {1, 2}});
  Rng rng(1);
  EXPECT_THROW(greedy_color(g, 2, rng), std::invalid_argument);
  EXPECT_NO_THROW(greedy_color(g, 3, rng));
}

TEST(GreedyTest, ForcedRunHitsAttemptCap) {
  const Graph g = Graph::build(3, Pairs{{0, 1}, {1, 2}});
  Rng rng(1);
  try {
    greedy_color(g, 1, rng, /*force=*/true);
    FAIL() << "expected the attempt cap to trip";
  } catch (const GreedyCapExceeded& e) {
    EXPECT_EQ(e.edge(), 1u);
  }
  EXPECT_EQ(greedy_attempt_cap(3, 1),
            static_cast<std::uint64_t>(std::ceil(10.0 * std::log(3.0))));
}

TEST(GreedyTest, DeterministicUnderSeed) {
  Rng graph_rng(3);
  const Graph g = testing::random_graph(60, 0.3, graph_rng);
  const auto q = static_cast<Color>(3 * g.max_degree());
  Rng a(42), b(42);
  const GreedyResult ra = greedy_color(g, q, a);
  const GreedyResult rb = greedy_color(g, q, b);
  EXPECT_TRUE(std::equal(ra.coloring.colors().begin(), ra.coloring.colors().end(),
                         rb.coloring.colors().begin()));
  EXPECT_EQ(ra.report.attempts_total, rb.report.attempts_total);
}

// (2+eps)Delta palette with eps = 0.5: mean attempts per edge <= 3/gamma.
TEST(GreedyTest, MeanAttemptsWithinBound) {
  const double eps = 0.5;
  const double gamma = std::min(1.0, eps);
  std::uint64_t attempts = 0;
  std::uint64_t edges = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const Graph g = testing::random_graph(80, 0.2, rng);
    ASSERT_GE(g.max_degree(), 4u);
    const auto q = static_cast<Color>(std::floor((2.0 + eps) * g.max_degree()));
    const GreedyResult r = greedy_color(g, q, rng);
    ASSERT_FALSE(verify_proper(g, r.coloring, true).has_value());
    ASSERT_LE(r.report.colors_used, q);
    ASSERT_GE(r.report.attempts_total, g.num_edges());
    attempts += r.report.attempts_total;
    edges += g.num_edges();
  }
  EXPECT_LE(static_cast<double>(attempts) / edges, 3.0 / gamma);
}

}  // namespace
}  // namespace nearviz
