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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "nearviz/gen_io.hpp"
#include "nearviz/greedy.hpp"
#include "nearviz/ncl.hpp"
#include "nearviz/verify.hpp"

namespace py = pybind11;

namespace nearviz {
namespace {

using EdgePairs = std::vector<std::pair<Vertex, Vertex>>;

std::vector<Color> to_vector(const PartialColoring& c) {
  return {c.colors().begin(), c.colors().end()};
}

EdgePairs edge_pairs(const Graph& g) {
  EdgePairs out;
  out.reserve(g.num_edges());
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

void check_length(const Graph& g, const std::vector<Color>& colors) {
  if (colors.size() != g.num_edges()) {
    throw std::invalid_argument("expected " + std::to_string(g.num_edges()) +
                                " colors, got " + std::to_string(colors.size()));
  }
}

}  // namespace
}  // namespace nearviz

PYBIND11_MODULE(_nearviz, m) {
  using namespace nearviz;
  m.doc() = "Randomized (1+eps)Delta edge coloring";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<RegimeError>(m, "RegimeError", PyExc_ValueError);
  py::register_exception<GreedyCapExceeded>(m, "GreedyCapExceeded",
                                            PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const EdgePairs& edges) {
             return Graph::build(n, edges);
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def("degree", &Graph::degree, py::arg("v"))
      .def("edges", &edge_pairs)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) +
               ", m=" + std::to_string(g.num_edges()) +
               ", delta=" + std::to_string(g.max_degree()) + ")";
      });

  m.def("gen_gnp", [](std::size_t n, double p, std::uint64_t seed) {
    Rng rng(seed);
    return gen_gnp(n, p, rng);
  }, py::arg("n"), py::arg("p"), py::arg("seed") = 1);
  m.def("gen_near_regular", [](std::size_t n, std::size_t d, std::uint64_t seed) {
    Rng rng(seed);
    return gen_near_regular(n, d, rng);
  }, py::arg("n"), py::arg("d"), py::arg("seed") = 1);

  m.def("read_graph",
        py::overload_cast<const std::filesystem::path&>(&read_graph),
        py::arg("path"));
  m.def("write_graph",
        py::overload_cast<const Graph&, const std::filesystem::path&>(&write_graph),
        py::arg("graph"), py::arg("path"));
  m.def("parse_graph", [](const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
  }, py::arg("text"));
  m.def("format_coloring", [](const Graph& g, const std::vector<Color>& colors) {
    check_length(g, colors);
    std::ostringstream os;
    write_coloring(g, colors, os);
    return os.str();
  }, py::arg("graph"), py::arg("colors"));

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("epsilon", &RunConfig::epsilon)
      .def_readwrite("kappa_const", &RunConfig::kappa_const)
      .def_readwrite("ell_const", &RunConfig::ell_const)
      .def_readwrite("kappa", &RunConfig::kappa_override)
      .def_readwrite("ell", &RunConfig::ell_override)
      .def_readwrite("seed", &RunConfig::seed)
      .def_readwrite("force", &RunConfig::force)
      .def_readwrite("debug_check", &RunConfig::debug_check)
      .def("validate", &RunConfig::validate)
      .def("__repr__", &RunConfig::describe);

  py::class_<RunStats>(m, "RunStats")
      .def_readonly("n", &RunStats::n)
      .def_readonly("m", &RunStats::m)
      .def_readonly("delta", &RunStats::delta)
      .def_readonly("epsilon", &RunStats::epsilon)
      .def_readonly("q1", &RunStats::q1)
      .def_readonly("kappa", &RunStats::kappa)
      .def_readonly("ell", &RunStats::ell)
      .def_readonly("seed", &RunStats::seed)
      .def_readonly("iterations", &RunStats::iterations)
      .def_readonly("flagged_edges", &RunStats::flagged_edges)
      .def_readonly("max_residual_degree", &RunStats::max_residual_degree)
      .def_readonly("stage1_colors", &RunStats::stage1_colors)
      .def_readonly("total_colors", &RunStats::total_colors)
      .def_readonly("max_color", &RunStats::max_color)
      .def_readonly("stage1_millis", &RunStats::stage1_millis)
      .def_readonly("stage2_millis", &RunStats::stage2_millis)
      .def_property_readonly("success", &RunStats::success)
      .def_property_readonly("fail_reason", [](const RunStats& s) -> py::object {
        if (!s.fail_reason) return py::none();
        return py::str(std::string(to_string(*s.fail_reason)));
      })
      .def("csv_row", &stats_csv_row);
  m.attr("STATS_CSV_HEADER") = std::string(stats_csv_header());

  m.def("edge_color", [](const Graph& g, const RunConfig& cfg) {
    RunResult r = edge_color(g, cfg);
    py::object colors = py::none();
    if (r.coloring) colors = py::cast(to_vector(*r.coloring));
    return py::make_tuple(colors, r.stats);
  }, py::arg("graph"), py::arg("config") = RunConfig{},
     "Returns (colors or None, stats).");

  py::class_<GreedyReport>(m, "GreedyReport")
      .def_readonly("attempts_total", &GreedyReport::attempts_total)
      .def_readonly("attempts_max_per_edge", &GreedyReport::attempts_max_per_edge)
      .def_readonly("colors_used", &GreedyReport::colors_used);

  m.def("greedy_color", [](const Graph& g, Color q, std::uint64_t seed, bool force) {
    Rng rng(seed);
    GreedyResult r = greedy_color(g, q, rng, force);
    return py::make_tuple(to_vector(r.coloring), r.report);
  }, py::arg("graph"), py::arg("q"), py::arg("seed") = 1, py::arg("force") = false);

  m.def("verify_proper", [](const Graph& g, const std::vector<Color>& colors,
                            bool require_complete) -> std::optional<std::string> {
    check_length(g, colors);
    if (auto bad = verify_proper(g, colors, require_complete)) return bad->describe(g);
    return std::nullopt;
  }, py::arg("graph"), py::arg("colors"), py::arg("require_complete") = true,
     "None when proper, otherwise a description of the first violation.");

  m.def("palette_report", [](const std::vector<Color>& colors) {
    const PaletteReport r = palette_report(colors);
    return py::make_tuple(r.distinct, r.max_color);
  }, py::arg("colors"), "Returns (distinct colors, max color or None).");

  m.def("target_palette", &target_palette, py::arg("delta"), py::arg("epsilon"));
}
