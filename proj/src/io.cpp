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

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "nearviz/gen_io.hpp"

namespace nearviz {
namespace {

// Splits on whitespace.
std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, std::size_t line,
                         const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected a non-negative integer ") +
                               what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

bool skippable(const std::vector<std::string_view>& toks) {
  return toks.empty() || toks[0].front() == '#';
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;

  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = tokens(line);
    if (skippable(toks)) continue;
    if (!have_header) {
      if (toks[0] != "p" || toks.size() != 3) {
        throw ParseError(lineno, "expected header 'p <n> <m>'");
      }
      n = parse_uint(toks[1], lineno, "vertex count");
      m = parse_uint(toks[2], lineno, "edge count");
      if (n > kNoVertex) throw ParseError(lineno, "vertex count too large");
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (toks.size() != 2) {
      throw ParseError(lineno, "expected '<u> <v>'");
    }
    const std::uint64_t u = parse_uint(toks[0], lineno, "vertex id");
    const std::uint64_t v = parse_uint(toks[1], lineno, "vertex id");
    if (u >= n || v >= n) {
      throw ParseError(lineno, "vertex id out of range [0," + std::to_string(n) + ")");
    }
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    const std::uint64_t key = u < v ? (u << 32) | v : (v << 32) | u;
    if (!seen.insert(key).second) {
      throw ParseError(lineno, "duplicate edge (" + std::to_string(u) + "," +
                                   std::to_string(v) + ")");
    }
    if (edges.size() == m) {
      throw ParseError(lineno, "more edges than the header's " + std::to_string(m));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_header) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'p <n> <m>' header");
  if (edges.size() != m) {
    throw ParseError(lineno, "header declares " + std::to_string(m) +
                                 " edges but " + std::to_string(edges.size()) +
                                 " were read");
  }
  return Graph::build(static_cast<std::size_t>(n), edges);
}

Graph read_graph(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
  out << "p " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graph(const Graph& g, const std::filesystem::path& path) {
  auto out = open_out(path);
  write_graph(g, out);
}

void write_coloring(const Graph& g, std::span<const Color> colors,
                    std::ostream& out) {
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    out << ed.u << ' ' << ed.v << ' ' << colors[e] << '\n';
  }
}

void write_coloring(const PartialColoring& c, std::ostream& out) {
  write_coloring(c.graph(), c.colors(), out);
}

void write_coloring(const PartialColoring& c,
                    const std::filesystem::path& path) {
  auto out = open_out(path);
  write_coloring(c, out);
}

std::vector<Color> read_coloring(const Graph& g, std::istream& in) {
  std::vector<Color> colors(g.num_edges(), kBlank);
  std::vector<bool> seen(g.num_edges(), false);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = tokens(line);
    if (skippable(toks)) continue;
    if (toks.size() != 3) throw ParseError(lineno, "expected '<u> <v> <color>'");
    const std::uint64_t u = parse_uint(toks[0], lineno, "vertex id");
    const std::uint64_t v = parse_uint(toks[1], lineno, "vertex id");
    const std::uint64_t a = parse_uint(toks[2], lineno, "color");
    if (a > kNoVertex) throw ParseError(lineno, "color too large");
    const auto e = (u < kNoVertex && v < kNoVertex)
                       ? g.find_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))
                       : std::nullopt;
    if (!e) {
      throw ParseError(lineno, "(" + std::to_string(u) + "," + std::to_string(v) +
                                   ") is not an edge of the graph");
    }
    if (seen[*e]) throw ParseError(lineno, "edge listed twice");
    seen[*e] = true;
    colors[*e] = static_cast<Color>(a);
  }
  return colors;
}

std::vector<Color> read_coloring(const Graph& g,
                                 const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_coloring(g, in);
}

}  // namespace nearviz
