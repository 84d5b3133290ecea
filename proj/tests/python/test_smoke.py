# Copyright 2026 The nearviz Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import nearviz


def formula_config(n, eps, seed):
    kappa = math.ceil(8 * math.log(n) / eps)
    cfg = nearviz.RunConfig()
    cfg.epsilon = eps
    cfg.kappa = kappa
    cfg.ell = math.ceil(2 * kappa * math.log(n) / eps)
    cfg.seed = seed
    cfg.force = True
    return cfg


def test_graph_build_and_accessors():
    g = nearviz.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.num_vertices == 4
    assert g.num_edges == 3
    assert g.max_degree == 2
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    with pytest.raises(ValueError):
        nearviz.Graph(3, [(0, 0)])


def test_edge_color_dense_graph():
    g = nearviz.gen_gnp(150, 0.5, seed=3)
    colors, stats = nearviz.edge_color(g, formula_config(150, 0.5, 1))
    assert stats.success
    assert stats.fail_reason is None
    assert len(colors) == g.num_edges
    assert nearviz.verify_proper(g, colors) is None
    distinct, max_color = nearviz.palette_report(colors)
    assert max_color <= nearviz.target_palette(g.max_degree, 0.5)
    assert distinct == stats.total_colors


def test_edge_color_is_deterministic():
    g = nearviz.gen_near_regular(100, 20, seed=2)
    cfg = formula_config(100, 0.5, 9)
    a, _ = nearviz.edge_color(g, cfg)
    b, _ = nearviz.edge_color(g, cfg)
    assert a == b


def test_regime_error_without_force():
    g = nearviz.gen_gnp(30, 0.3, seed=1)
    with pytest.raises(nearviz.RegimeError):
        nearviz.edge_color(g, nearviz.RunConfig())


def test_failure_reports_reason():
    g = nearviz.gen_gnp(60, 0.5, seed=8)
    cfg = formula_config(60, 0.5, 1)
    cfg.ell = 1
    colors, stats = nearviz.edge_color(g, cfg)
    assert colors is None
    assert stats.fail_reason == "stage2-degree"
    assert stats.csv_row().count(",") == nearviz.STATS_CSV_HEADER.count(",")


def test_greedy_and_verify():
    g = nearviz.gen_gnp(50, 0.4, seed=5)
    colors, report = nearviz.greedy_color(g, 3 * g.max_degree, seed=4)
    assert nearviz.verify_proper(g, colors) is None
    assert report.attempts_total >= g.num_edges
    bad = list(colors)
    u, v = g.edges()[0]
    other = next(i for i, (a, b) in enumerate(g.edges()) if i > 0 and u in (a, b))
    bad[other] = bad[0]
    assert "share an endpoint" in nearviz.verify_proper(g, bad)


def test_text_round_trip(tmp_path):
    g = nearviz.parse_graph("# tiny\np 3 2\n0 1\n1 2\n")
    path = tmp_path / "g.txt"
    nearviz.write_graph(g, path)
    assert nearviz.read_graph(path).edges() == g.edges()
    assert nearviz.format_coloring(g, [1, 2]) == "0 1 1\n1 2 2\n"
    with pytest.raises(nearviz.ParseError):
        nearviz.parse_graph("0 1\n")
