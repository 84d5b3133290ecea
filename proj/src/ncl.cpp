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

#include "nearviz/ncl.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "nearviz/chains.hpp"
#include "nearviz/greedy.hpp"
#include "nearviz/verify.hpp"

namespace nearviz {
namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::string format_double(double x, const char* spec) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

}  // namespace

void RunConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  if (!(kappa_const >= 1.0) || !(ell_const >= 1.0)) {
    throw std::invalid_argument("kappa/ell constants must be at least 1");
  }
  if ((kappa_override && *kappa_override < 1) ||
      (ell_override && *ell_override < 1)) {
    throw std::invalid_argument("kappa/ell overrides must be at least 1");
  }
}

std::string RunConfig::describe() const {
  std::ostringstream os;
  os << "epsilon=" << format_double(epsilon, "%.17g")
     << " kappa_const=" << format_double(kappa_const, "%.17g")
     << " ell_const=" << format_double(ell_const, "%.17g") << " kappa="
     << (kappa_override ? std::to_string(*kappa_override) : "auto")
     << " ell=" << (ell_override ? std::to_string(*ell_override) : "auto")
     << " seed=" << seed << " force=" << (force ? 1 : 0)
     << " debug_check=" << (debug_check ? 1 : 0);
  return os.str();
}

RegimeError::RegimeError(std::size_t delta, double threshold)
    : std::invalid_argument(
          "maximum degree " + std::to_string(delta) +
          " is below the regime threshold 500*ln(n)/epsilon = " +
          format_double(threshold, "%.2f") + " (use force to run anyway)"),
      threshold_(threshold) {}

std::uint64_t compute_kappa(double ln_n, double eps, double c) {
  return static_cast<std::uint64_t>(std::ceil(c * ln_n / eps));
}

std::uint64_t compute_ell(std::uint64_t kappa, double ln_n, double eps,
                          double c) {
  const double k = static_cast<double>(kappa);
  return static_cast<std::uint64_t>(std::ceil(c * k * k * ln_n / eps));
}

std::uint64_t floor_tolerant(double x) {
  return static_cast<std::uint64_t>(std::floor(x + 1e-9));
}

Color stage1_palette(std::size_t delta, double eps) {
  return static_cast<Color>(
      floor_tolerant((1.0 + eps / 2.0) * static_cast<double>(delta)));
}

Color target_palette(std::size_t delta, double eps) {
  return static_cast<Color>(
      floor_tolerant((1.0 + eps) * static_cast<double>(delta)));
}

Params resolve_params(const Graph& g, const RunConfig& cfg) {
  cfg.validate();
  if (g.num_vertices() < 2) {
    throw std::invalid_argument("parameter resolution needs n >= 2");
  }
  const double ln_n = std::log(static_cast<double>(g.num_vertices()));
  const double eps = cfg.epsilon;

  Params p;
  p.q1 = stage1_palette(g.max_degree(), eps);
  p.kappa = cfg.kappa_override ? *cfg.kappa_override
                                : compute_kappa(ln_n, eps, cfg.kappa_const);
  p.ell = cfg.ell_override ? *cfg.ell_override
                            : compute_ell(p.kappa, ln_n, eps, cfg.ell_const);
  if (cfg.kappa_override || cfg.ell_override) {
    p.warnings.emplace_back(
        "explicit kappa/ell override: correctness holds but the failure "
        "probability and runtime guarantees are void");
  }
  p.regime_threshold = 500.0 * ln_n / eps;
  p.regime_ok = static_cast<double>(g.max_degree()) >= p.regime_threshold;
  if (!p.regime_ok) {
    if (!cfg.force) throw RegimeError(g.max_degree(), p.regime_threshold);
    p.warnings.emplace_back(
        "maximum degree " + std::to_string(g.max_degree()) +
        " is below the regime threshold " +
        format_double(p.regime_threshold, "%.2f") +
        "; running under force with guarantees void");
  }
  return p;
}

std::vector<Color> sample_palette(Color q1, std::uint64_t kappa, Rng& rng) {
  if (q1 < 1 || kappa < 1) {
    throw std::invalid_argument("palette sampling needs q1 >= 1 and kappa >= 1");
  }
  std::vector<Color> out;
  out.reserve(kappa);
  for (std::uint64_t i = 0; i < kappa; ++i) {
    out.push_back(static_cast<Color>(rng.one_to(q1)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

UncoloredPool::UncoloredPool(std::size_t m) : items_(m), position_(m) {
  for (std::size_t i = 0; i < m; ++i) {
    items_[i] = static_cast<EdgeId>(i);
    position_[i] = static_cast<std::uint32_t>(i);
  }
}

EdgeId UncoloredPool::pick(Rng& rng) const {
  if (items_.empty()) throw std::logic_error("pick from an empty pool");
  return items_[rng.below(items_.size())];
}

void UncoloredPool::remove(EdgeId e) {
  if (!contains(e)) {
    throw std::invalid_argument("edge " + std::to_string(e) +
                                " is not in the pool");
  }
  const std::uint32_t at = position_[e];
  const EdgeId last = items_.back();
  items_[at] = last;
  position_[last] = at;
  items_.pop_back();
  position_[e] = kAbsent;
}

std::string_view to_string(FailReason reason) {
  switch (reason) {
    case FailReason::kStage1Fan:
      return "stage1-fan";
    case FailReason::kStage1Beta:
      return "stage1-beta";
    case FailReason::kStage2Degree:
      return "stage2-degree";
  }
  return "unknown";
}

namespace {

RunStats base_stats(const Graph& g, const RunConfig& cfg, const Params& p) {
  RunStats s;
  s.n = g.num_vertices();
  s.m = g.num_edges();
  s.delta = g.max_degree();
  s.epsilon = cfg.epsilon;
  s.q1 = p.q1;
  s.kappa = p.kappa;
  s.ell = p.ell;
  s.seed = cfg.seed;
  return s;
}

}  // namespace

Stage1Result stage1(const Graph& g, const RunConfig& cfg, const Params& params,
                    Rng& rng, std::ostream* trace) {
  const auto start = Clock::now();
  const std::size_t m = g.num_edges();
  Stage1Result out{PartialColoring(g, std::max<Color>(params.q1, 1)),
                   base_stats(g, cfg, params)};
  PartialColoring& c = out.coloring;
  RunStats& stats = out.stats;
  if (m > 0 && (params.q1 < 1 || params.kappa < 1 || params.ell < 1)) {
    throw std::invalid_argument("stage 1 needs q1, kappa, ell >= 1");
  }

  UncoloredPool pool(m);
  FanScratch scratch(g.num_vertices());
  while (!pool.empty()) {
    const EdgeId e = pool.pick(rng);
    const Edge& ed = g.edge(e);
    const Vertex x = rng.coin() ? ed.v : ed.u;
    const std::vector<Color> palette = sample_palette(params.q1, params.kappa, rng);

    ChainOutcome built = vizing_chain(c, e, x, palette, params.ell, scratch);
    if (const auto* failure = std::get_if<ChainFailure>(&built)) {
      stats.fail_reason = *failure == ChainFailure::kFanExhausted
                              ? FailReason::kStage1Fan
                              : FailReason::kStage1Beta;
      break;
    }
    const VizingChain& chain = std::get<VizingChain>(built);
    const AugmentOutcome result = augment(c, chain, params.ell, rng);
    pool.remove(e);
    if (result.flagged) stats.flagged_edges.push_back(*result.flagged);
    ++stats.iterations;

    if (trace) {
      *trace << "iter=" << stats.iterations << " pivot=" << x
             << " fan_len=" << chain.fan.length()
             << " path_len=" << chain.path.length() << " flagged="
             << (result.flagged ? std::to_string(*result.flagged) : "none")
             << " case=" << to_string(result.kase) << '\n';
    }
    if (cfg.debug_check) {
      ++stats.debug_rescans;
      if (auto bad = verify_proper(g, c, false)) {
        throw std::logic_error("stage-1 iteration " +
                               std::to_string(stats.iterations) +
                               " left an improper coloring: " + bad->describe(g));
      }
      if (!c.index_consistent() ||
          c.colored_count() + pool.size() + stats.flagged_edges.size() != m) {
        throw std::logic_error("stage-1 iteration " +
                               std::to_string(stats.iterations) +
                               " broke the coloring bookkeeping");
      }
    }
  }

  stats.stage1_colors = palette_report(c).distinct;
  stats.stage1_millis = millis_since(start);
  return out;
}

ResidualGraph residual_subgraph(const Graph& g, const PartialColoring& c) {
  ResidualGraph out;
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (c.is_blank(e)) {
      edges.push_back(g.edge(e));
      out.source_edge.push_back(e);
    }
  }
  out.graph = Graph::build(g.num_vertices(), edges);
  return out;
}

RunResult edge_color(const Graph& g, const RunConfig& cfg, std::ostream* trace) {
  cfg.validate();
  RunResult out;
  if (g.num_edges() == 0) {
    out.stats = base_stats(g, cfg, out.params);
    out.stats.residual_degrees.assign(g.num_vertices(), 0);
    out.coloring.emplace(g, 1);
    return out;
  }
  out.params = resolve_params(g, cfg);
  Rng rng(cfg.seed);

  Stage1Result s1 = stage1(g, cfg, out.params, rng, trace);
  out.stats = std::move(s1.stats);
  RunStats& stats = out.stats;
  if (!stats.success()) return out;

  const auto start = Clock::now();
  ResidualGraph residual = residual_subgraph(g, s1.coloring);
  stats.residual_degrees.resize(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    stats.residual_degrees[v] =
        static_cast<std::uint32_t>(residual.graph.degree(v));
  }
  const std::size_t dstar = residual.graph.max_degree();
  stats.max_residual_degree = dstar;

  // Fail when Delta(G*) > eps * Delta / 6.
  if (6.0 * static_cast<double>(dstar) >
      cfg.epsilon * static_cast<double>(g.max_degree()) + 1e-9) {
    stats.fail_reason = FailReason::kStage2Degree;
    stats.stage2_millis = millis_since(start);
    return out;
  }

  const Color q1 = out.params.q1;
  const auto q2 = static_cast<Color>(3 * dstar);
  PartialColoring& final_coloring = out.coloring.emplace(g, q1 + q2);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!s1.coloring.is_blank(e)) final_coloring.set_color(e, s1.coloring.color_of(e));
  }
  if (dstar > 0) {
    GreedyResult second = greedy_color(residual.graph, q2, rng);
    for (EdgeId r = 0; r < residual.graph.num_edges(); ++r) {
      final_coloring.set_color(residual.source_edge[r],
                               second.coloring.color_of(r) + q1);
    }
  }
  stats.stage2_millis = millis_since(start);

  const PaletteReport report = palette_report(final_coloring);
  stats.total_colors = report.distinct;
  stats.max_color = report.max_color;
  return out;
}

std::string_view stats_csv_header() {
  return "n,m,delta,epsilon,kappa,ell,seed,success,fail_reason,stage1_colors,"
         "flagged,max_residual_degree,total_colors,stage1_millis,stage2_millis";
}

std::string stats_csv_row(const RunStats& s) {
  std::ostringstream os;
  os << s.n << ',' << s.m << ',' << s.delta << ','
     << format_double(s.epsilon, "%.17g") << ',' << s.kappa << ',' << s.ell
     << ',' << s.seed << ',' << (s.success() ? 1 : 0) << ','
     << (s.fail_reason ? to_string(*s.fail_reason) : std::string_view{})
     << ',' << s.stage1_colors << ',' << s.flagged_edges.size() << ','
     << s.max_residual_degree << ',' << s.total_colors << ','
     << format_double(s.stage1_millis, "%.3f") << ','
     << format_double(s.stage2_millis, "%.3f");
  return os.str();
}

}  // namespace nearviz
