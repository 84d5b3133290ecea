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

#include "nearviz/chains.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace nearviz {
namespace {

void check_palette(const PartialColoring& c, std::span<const Color> palette) {
  if (palette.empty()) {
    throw std::invalid_argument("color set must be nonempty");
  }
  for (std::size_t i = 0; i < palette.size(); ++i) {
    if (palette[i] < 1 || palette[i] > c.palette_size()) {
      throw std::invalid_argument("color " + std::to_string(palette[i]) +
                                  " outside the palette");
    }
    if (i > 0 && palette[i - 1] >= palette[i]) {
      throw std::invalid_argument(
          "color set must be sorted ascending without duplicates");
    }
  }
}

void check_blank_edge(const PartialColoring& c, EdgeId e, Vertex x) {
  if (e >= c.graph().num_edges()) {
    throw std::invalid_argument("edge id out of range");
  }
  if (!c.is_blank(e)) {
    throw std::invalid_argument("edge " + std::to_string(e) +
                                " is not blank");
  }
  if (!c.graph().has_endpoint(e, x)) {
    throw std::invalid_argument("pivot is not an endpoint of the edge");
  }
}

Color min_missing(const PartialColoring& c, Vertex z,
                  std::span<const Color> palette) {
  for (Color a : palette) {
    if (c.is_missing(z, a)) return a;
  }
  return kBlank;
}

// Shift without validation; the caller guarantees fan validity.
void shift_prefix(PartialColoring& c, const Fan& f, std::size_t k) {
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const EdgeId next = f.edges[i + 1];
    const Color moved = c.color_of(next);
    c.unset_color(next);
    c.set_color(f.edges[i], moved);
  }
}

// Flip the first `len` edges of p without validation.
void flip_prefix(PartialColoring& c, const AlternatingPath& p,
                 std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) c.unset_color(p.edges[i]);
  for (std::size_t i = 0; i < len; ++i) {
    c.set_color(p.edges[i], i % 2 == 0 ? p.beta : p.alpha);
  }
}

}  // namespace

std::optional<FanResult> make_fan(const PartialColoring& c, EdgeId e, Vertex x,
                                  std::span<const Color> palette,
                                  FanScratch& scratch) {
  check_blank_edge(c, e, x);
  check_palette(c, palette);
  if (scratch.position.size() < c.graph().num_vertices()) {
    throw std::invalid_argument("scratch is smaller than the graph");
  }

  const Graph& g = c.graph();
  FanResult out;
  Fan& fan = out.fan;
  fan.pivot = x;
  fan.leaves.push_back(g.other(e, x));
  fan.edges.push_back(e);
  scratch.position[fan.leaves[0]] = 0;

  std::optional<FanResult> result;
  Vertex z = fan.leaves[0];
  while (true) {
    const Color eta = min_missing(c, z, palette);
    if (eta == kBlank) break;  // FAIL

    const EdgeId xz = c.edge_with_color(x, eta);
    if (xz == kNoEdge) {
      out.alpha = eta;
      out.j = fan.length();
      result = std::move(out);
      break;
    }
    z = g.other(xz, x);
    if (const std::uint32_t pos = scratch.position[z];
        pos != FanScratch::kUnset) {
      out.alpha = eta;
      out.j = pos;
      result = std::move(out);
      break;
    }
    scratch.position[z] = static_cast<std::uint32_t>(fan.length());
    fan.leaves.push_back(z);
    fan.edges.push_back(xz);
  }

  const Fan& built = result ? result->fan : fan;
  for (Vertex leaf : built.leaves) scratch.position[leaf] = FanScratch::kUnset;
  return result;
}

std::optional<FanResult> make_fan(const PartialColoring& c, EdgeId e, Vertex x,
                                  std::span<const Color> palette) {
  FanScratch scratch(c.graph().num_vertices());
  return make_fan(c, e, x, palette, scratch);
}

ChainOutcome vizing_chain(const PartialColoring& c, EdgeId e, Vertex x,
                          std::span<const Color> palette, std::size_t max_path,
                          FanScratch& scratch) {
  if (max_path < 1) throw std::invalid_argument("path cap must be at least 1");
  auto fan = make_fan(c, e, x, palette, scratch);
  if (!fan) return ChainFailure::kFanExhausted;

  VizingChain chain;
  chain.fan = std::move(fan->fan);
  chain.alpha = fan->alpha;
  chain.j = fan->j;
  chain.source = &c;
  chain.stamp = c.version();
  chain.path.vertices.push_back(x);
  chain.path.alpha = chain.alpha;
  if (chain.j == chain.fan.length()) return chain;

  const Color beta = min_missing(c, x, palette);
  if (beta == kBlank) return ChainFailure::kPivotExhausted;
  chain.path.beta = beta;

  // alpha is used at x (the fan closed on y_j), beta is missing at x, so the
  // walk cannot revisit x and a proper coloring cannot revisit any vertex.
  const Graph& g = c.graph();
  Vertex at = x;
  Color want = chain.alpha;
  while (chain.path.length() < max_path) {
    const EdgeId next = c.edge_with_color(at, want);
    if (next == kNoEdge) break;
    at = g.other(next, at);
    chain.path.edges.push_back(next);
    chain.path.vertices.push_back(at);
    want = want == chain.alpha ? beta : chain.alpha;
  }
#ifndef NDEBUG
  {
    std::vector<Vertex> seen = chain.path.vertices;
    std::sort(seen.begin(), seen.end());
    assert(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    assert(chain.path.vertices[1] == chain.fan.leaves[chain.j]);
  }
#endif
  return chain;
}

ChainOutcome vizing_chain(const PartialColoring& c, EdgeId e, Vertex x,
                          std::span<const Color> palette,
                          std::size_t max_path) {
  FanScratch scratch(c.graph().num_vertices());
  return vizing_chain(c, e, x, palette, max_path, scratch);
}

void shift_fan(PartialColoring& c, const Fan& f) {
  const Graph& g = c.graph();
  const std::size_t k = f.length();
  if (k == 0 || f.edges.size() != k) {
    throw std::invalid_argument("fan must have matching nonempty leaves/edges");
  }
  for (std::size_t i = 0; i < k; ++i) {
    const EdgeId e = f.edges[i];
    if (e >= g.num_edges() || !g.has_endpoint(e, f.pivot) ||
        g.other(e, f.pivot) != f.leaves[i]) {
      throw std::invalid_argument("fan edge " + std::to_string(i) +
                                  " does not join the pivot and its leaf");
    }
  }
  if (!c.is_blank(f.edges[0])) {
    throw std::invalid_argument("first fan edge must be blank");
  }
  for (std::size_t i = 1; i < k; ++i) {
    const Color a = c.color_of(f.edges[i]);
    if (a == kBlank || !c.is_missing(f.leaves[i - 1], a)) {
      throw std::invalid_argument("fan edge " + std::to_string(i) +
                                  " color is not missing at the previous leaf");
    }
  }
  std::vector<Vertex> sorted = f.leaves;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("fan leaves must be distinct");
  }
  shift_prefix(c, f, k);
}

void flip_path(PartialColoring& c, const AlternatingPath& p) {
  const std::size_t s = p.length();
  if (p.vertices.size() != s + 1) {
    throw std::invalid_argument("path must have one more vertex than edges");
  }
  if (s == 0) return;
  const Graph& g = c.graph();
  const Color a = p.alpha;
  const Color b = p.beta;
  if (a == b || a < 1 || b < 1 || a > c.palette_size() ||
      b > c.palette_size()) {
    throw std::invalid_argument("path colors must be two distinct palette colors");
  }
  for (std::size_t i = 0; i < s; ++i) {
    const EdgeId e = p.edges[i];
    if (e >= g.num_edges() || !g.has_endpoint(e, p.vertices[i]) ||
        g.other(e, p.vertices[i]) != p.vertices[i + 1]) {
      throw std::invalid_argument("path edge " + std::to_string(i) +
                                  " does not join consecutive vertices");
    }
    if (c.color_of(e) != (i % 2 == 0 ? a : b)) {
      throw std::invalid_argument("path edge " + std::to_string(i) +
                                  " breaks the alternation");
    }
  }
  std::vector<Vertex> sorted = p.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("path vertices must be distinct");
  }
  const Color after_last = (s - 1) % 2 == 0 ? b : a;
  if (!c.is_missing(p.start(), b) || !c.is_missing(p.end(), after_last)) {
    throw std::invalid_argument("path is not maximal");
  }
  flip_prefix(c, p, s);
}

std::string_view to_string(AugmentCase kase) {
  switch (kase) {
    case AugmentCase::kHappy:
      return "happy";
    case AugmentCase::kShort:
      return "short";
    case AugmentCase::kLongPrefix:
      return "long-j";
    case AugmentCase::kLongWhole:
      return "long-k";
  }
  return "unknown";
}

AugmentOutcome augment(PartialColoring& c, const VizingChain& chain,
                       std::size_t max_path, Rng& rng) {
  if (chain.source != &c || chain.stamp != c.version()) {
    throw StaleChainError("chain was built against a different coloring state");
  }
  const Fan& fan = chain.fan;
  const AlternatingPath& path = chain.path;
  const std::size_t k = fan.length();
  const std::size_t s = path.length();
  if (s > max_path) {
    throw std::invalid_argument("chain path exceeds the cap");
  }

  AugmentOutcome out;
  out.colored = fan.edges[0];

  if (s == 0) {
    shift_prefix(c, fan, k);
    c.set_color(fan.edges[k - 1], chain.alpha);
    out.kase = AugmentCase::kHappy;
    return out;
  }

  std::size_t kept = s;
  if (s == max_path) {
    const auto cut = static_cast<std::size_t>(rng.one_to(max_path));
    const EdgeId flagged = path.edges[cut - 1];
    c.unset_color(flagged);
    out.flagged = flagged;
    kept = cut - 1;
  }
  flip_prefix(c, path, kept);

  const std::size_t j = chain.j;
  if (path.vertices[kept] == fan.leaves[j - 1]) {
    shift_prefix(c, fan, k);
    c.set_color(fan.edges[k - 1], chain.alpha);
    out.shifted_whole_fan = true;
  } else {
    shift_prefix(c, fan, j);
    c.set_color(fan.edges[j - 1], chain.alpha);
    out.shifted_whole_fan = false;
  }
  if (out.flagged) {
    out.kase = out.shifted_whole_fan ? AugmentCase::kLongWhole
                                     : AugmentCase::kLongPrefix;
  } else {
    out.kase = AugmentCase::kShort;
  }
  return out;
}

}  // namespace nearviz
