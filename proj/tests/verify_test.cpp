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

#include <vector>

#include "nearviz/verify.hpp"
#include "test_support.hpp"

namespace nearviz {
namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

TEST(VerifyTest, ProperTriangle) {
  const Graph g = Graph::build(3, Pairs{{0, 1}, {1, 2}, {0, 2}});
  const std::vector<Color> colors = {1, 2, 3};
  EXPECT_FALSE(verify_proper(g, colors, true).has_value());
  const PaletteReport r = palette_report(colors);
  EXPECT_EQ(r.distinct, 3u);
  EXPECT_EQ(r.max_color, std::optional<Color>(3));
}

TEST(VerifyTest, ConflictOnPath) {
  const Graph g = Graph::build(3, Pairs{{0, 1}, {1, 2}});
  const std::vector<Color> colors = {1, 1};
  const auto bad = verify_proper(g, colors, false);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->kind, Violation::Kind::kConflict);
  EXPECT_EQ(bad->first, 0u);
  EXPECT_EQ(bad->second, 1u);
  EXPECT_NE(bad->describe(g).find("(0,1)"), std::string::npos);
}

TEST(VerifyTest, BlankEdgeOnlyWhenCompleteRequired) {
  const Graph g = Graph::build(3, Pairs{{0, 1}, {1, 2}});
  const std::vector<Color> colors = {1, kBlank};
  EXPECT_FALSE(verify_proper(g, colors, false).has_value());
  const auto bad = verify_proper(g, colors, true);
  ASSERT_TRUE(bad.has_value());
  EXPECT_EQ(bad->kind, Violation::Kind::kBlank);
  EXPECT_EQ(bad->first, 1u);
}

TEST(VerifyTest, EmptyPaletteReport) {
  const PaletteReport r = palette_report(std::vector<Color>{});
  EXPECT_EQ(r.distinct, 0u);
  EXPECT_FALSE(r.max_color.has_value());
}

// The verifier agrees with the pairwise predicate on random, possibly
// improper color arrays.
TEST(VerifyTest, AgreesWithPairwisePredicate) {
  Rng rng(17);
  int improper = 0;
  for (int round = 0; round < 500; ++round) {
    const Graph g = testing::random_graph(3 + rng.below(15), 0.4, rng);
    std::vector<Color> colors(g.num_edges());
    const auto q = static_cast<Color>(1 + g.max_degree() + rng.below(4));
    for (Color& a : colors) a = static_cast<Color>(rng.below(q + 1));
    const bool expect = testing::brute_proper(g, colors);
    improper += expect ? 0 : 1;
    EXPECT_EQ(!verify_proper(g, colors, false).has_value(), expect);
  }
  EXPECT_GT(improper, 50);
}

}  // namespace
}  // namespace nearviz
