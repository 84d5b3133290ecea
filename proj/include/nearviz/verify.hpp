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

// Verification oracles. Nothing here reads the missing-color index of a
// PartialColoring; every check is rebuilt from the per-edge colors.

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "nearviz/chains.hpp"
#include "nearviz/coloring.hpp"
#include "nearviz/graph.hpp"

namespace nearviz {

struct Violation {
  enum class Kind { kConflict, kBlank };
  Kind kind;
  EdgeId first;
  /// The second edge of a conflicting pair; kNoEdge for kBlank.
  EdgeId second = kNoEdge;

  std::string describe(const Graph& g) const;
};

/// First properness violation, or nullopt. Conflicts are searched vertex by
/// vertex in id order. With `require_complete`, a blank edge is a violation
/// and is reported before any conflict.
std::optional<Violation> verify_proper(const Graph& g,
                                       std::span<const Color> colors,
                                       bool require_complete);
std::optional<Violation> verify_proper(const Graph& g,
                                       const PartialColoring& c,
                                       bool require_complete);

struct PaletteReport {
  std::size_t distinct = 0;
  std::optional<Color> max_color;
};

PaletteReport palette_report(std::span<const Color> colors);
PaletteReport palette_report(const PartialColoring& c);

/// Reference transcriptions of fan and chain construction. Missing sets are
/// recomputed by scanning incident edges; fan membership is a linear search.
/// Same contracts as make_fan / vizing_chain.
std::optional<FanResult> naive_make_fan(const PartialColoring& c, EdgeId e,
                                        Vertex x,
                                        std::span<const Color> palette);
ChainOutcome naive_vizing_chain(const PartialColoring& c, EdgeId e, Vertex x,
                                std::span<const Color> palette,
                                std::size_t max_path);

}  // namespace nearviz
