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

#include "nearviz/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace nearviz {

std::string Violation::describe(const Graph& g) const {
  auto name = [&](EdgeId e) {
    const Edge& ed = g.edge(e);
    return "(" + std::to_string(ed.u) + "," + std::to_string(ed.v) + ")";
  };
  if (kind == Kind::kBlank) return "blank edge " + name(first);
  return "edges " + name(first) + " and " + name(second) +
         " share an endpoint and a color";
}

std::optional<Violation> verify_proper(const Graph& g,
                                       std::span<const Color> colors,
                                       bool require_complete) {
  if (colors.size() != g.num_edges()) {
    throw std::invalid_argument("color array length does not match edge count");
  }
  if (require_complete) {
    for (EdgeId e = 0; e < colors.size(); ++e) {
      if (colors[e] == kBlank) return Violation{Violation::Kind::kBlank, e};
    }
  }
  // Sort each vertex's incident colors; equal neighbors are conflicts.
  std::vector<std::pair<Color, EdgeId>> around;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    around.clear();
    for (const Incidence& inc : g.neighbors(v)) {
      if (colors[inc.edge] != kBlank) around.emplace_back(colors[inc.edge], inc.edge);
    }
    std::sort(around.begin(), around.end());
    for (std::size_t i = 1; i < around.size(); ++i) {
      if (around[i].first == around[i - 1].first) {
        return Violation{Violation::Kind::kConflict, around[i - 1].second,
                         around[i].second};
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> verify_proper(const Graph& g,
                                       const PartialColoring& c,
                                       bool require_complete) {
  return verify_proper(g, c.colors(), require_complete);
}

PaletteReport palette_report(std::span<const Color> colors) {
  PaletteReport out;
  std::vector<Color> used;
  for (Color a : colors) {
    if (a != kBlank) used.push_back(a);
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  out.distinct = used.size();
  if (!used.empty()) out.max_color = used.back();
  return out;
}

PaletteReport palette_report(const PartialColoring& c) {
  return palette_report(c.colors());
}

namespace {

// Edge at x colored a, by scanning x's incident edges.
std::optional<EdgeId> scan_color(const PartialColoring& c, Vertex x, Color a) {
  for (const Incidence& inc : c.graph().neighbors(x)) {
    if (c.color_of(inc.edge) == a) return inc.edge;
  }
  return std::nullopt;
}

std::optional<Color> scan_min_missing(const PartialColoring& c, Vertex z,
                                      std::span<const Color> palette) {
  for (Color a : palette) {
    if (!scan_color(c, z, a)) return a;
  }
  return std::nullopt;
}

void check_inputs(const PartialColoring& c, EdgeId e, Vertex x,
                  std::span<const Color> palette) {
  const Graph& g = c.graph();
  if (e >= g.num_edges() || c.color_of(e) != kBlank ||
      (g.edge(e).u != x && g.edge(e).v != x)) {
    throw std::invalid_argument("expected a blank edge incident to the pivot");
  }
  if (palette.empty() ||
      !std::is_sorted(palette.begin(), palette.end()) ||
      std::adjacent_find(palette.begin(), palette.end()) != palette.end() ||
      palette.front() < 1 || palette.back() > c.palette_size()) {
    throw std::invalid_argument("color set must be a sorted nonempty subset of the palette");
  }
}

}  // namespace

std::optional<FanResult> naive_make_fan(const PartialColoring& c, EdgeId e,
                                        Vertex x,
                                        std::span<const Color> palette) {
  check_inputs(c, e, x, palette);
  const Graph& g = c.graph();
  const Edge& xy = g.edge(e);
  FanResult r;
  r.fan.pivot = x;
  r.fan.leaves.push_back(xy.u == x ? xy.v : xy.u);
  r.fan.edges.push_back(e);

  Vertex z = r.fan.leaves.back();
  for (;;) {
    const auto eta = scan_min_missing(c, z, palette);
    if (!eta) return std::nullopt;
    const auto xz = scan_color(c, x, *eta);
    if (!xz) {
      r.alpha = *eta;
      r.j = r.fan.leaves.size();
      return r;
    }
    const Edge& ed = g.edge(*xz);
    z = ed.u == x ? ed.v : ed.u;
    for (std::size_t i = 0; i < r.fan.leaves.size(); ++i) {
      if (r.fan.leaves[i] == z) {
        r.alpha = *eta;
        r.j = i;
        return r;
      }
    }
    r.fan.leaves.push_back(z);
    r.fan.edges.push_back(*xz);
  }
}

ChainOutcome naive_vizing_chain(const PartialColoring& c, EdgeId e, Vertex x,
                                std::span<const Color> palette,
                                std::size_t max_path) {
  if (max_path < 1) throw std::invalid_argument("path cap must be at least 1");
  auto fan = naive_make_fan(c, e, x, palette);
  if (!fan) return ChainFailure::kFanExhausted;

  VizingChain out;
  out.fan = fan->fan;
  out.alpha = fan->alpha;
  out.j = fan->j;
  out.source = &c;
  out.stamp = c.version();
  out.path.vertices = {x};
  out.path.alpha = fan->alpha;
  if (fan->j == fan->fan.leaves.size()) return out;

  const auto beta = scan_min_missing(c, x, palette);
  if (!beta) return ChainFailure::kPivotExhausted;
  out.path.beta = *beta;

  Vertex at = x;
  for (std::size_t step = 0; step < max_path; ++step) {
    const Color want = step % 2 == 0 ? out.alpha : *beta;
    const auto next = scan_color(c, at, want);
    if (!next) break;
    const Edge& ed = c.graph().edge(*next);
    at = ed.u == at ? ed.v : ed.u;
    out.path.edges.push_back(*next);
    out.path.vertices.push_back(at);
  }
  return out;
}

}  // namespace nearviz
