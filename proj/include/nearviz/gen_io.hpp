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

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "nearviz/coloring.hpp"
#include "nearviz/graph.hpp"
#include "nearviz/rng.hpp"

namespace nearviz {

/// G(n, p): every unordered pair independently with probability p. Edges come
/// out in lexicographic order.
Graph gen_gnp(std::size_t n, double p, Rng& rng);

/// Configuration-model pairing for a simple graph with every degree close to
/// d. Loops and duplicate pairs are re-paired; stubs that still cannot be
/// paired are placed with edge switches. Throws std::invalid_argument if
/// n*d is odd or d >= n (unless d == 0), and std::runtime_error when the
/// retry budget runs out.
Graph gen_near_regular(std::size_t n, std::size_t d, Rng& rng);

// Edge-list format:
//   # comment lines and blank lines are ignored
//   p <n> <m>        required, before any edge
//   <u> <v>          m lines, 0-indexed vertex ids
// Coloring format: one `<u> <v> <color>` line per edge in edge-id order;
// color 0 marks a blank edge.

/// Throws ParseError with the offending line.
Graph read_graph(std::istream& in);
Graph read_graph(const std::filesystem::path& path);
void write_graph(const Graph& g, std::ostream& out);
void write_graph(const Graph& g, const std::filesystem::path& path);

void write_coloring(const Graph& g, std::span<const Color> colors,
                    std::ostream& out);
void write_coloring(const PartialColoring& c, std::ostream& out);
void write_coloring(const PartialColoring& c,
                    const std::filesystem::path& path);

/// Per-edge colors of `g` read from a coloring file. Edges absent from the
/// file stay blank. Throws ParseError for unknown edges, repeated edges and
/// malformed lines.
std::vector<Color> read_coloring(const Graph& g, std::istream& in);
std::vector<Color> read_coloring(const Graph& g,
                                 const std::filesystem::path& path);

}  // namespace nearviz
