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
"""Randomized (1+eps)Delta edge coloring."""

from ._nearviz import (
    STATS_CSV_HEADER,
    Graph,
    GreedyCapExceeded,
    GreedyReport,
    ParseError,
    RegimeError,
    RunConfig,
    RunStats,
    edge_color,
    format_coloring,
    gen_gnp,
    gen_near_regular,
    greedy_color,
    palette_report,
    parse_graph,
    read_graph,
    target_palette,
    verify_proper,
    write_graph,
)

__all__ = [
    "STATS_CSV_HEADER",
    "Graph",
    "GreedyCapExceeded",
    "GreedyReport",
    "ParseError",
    "RegimeError",
    "RunConfig",
    "RunStats",
    "edge_color",
    "format_coloring",
    "gen_gnp",
    "gen_near_regular",
    "greedy_color",
    "palette_report",
    "parse_graph",
    "read_graph",
    "target_palette",
    "verify_proper",
    "write_graph",
]
