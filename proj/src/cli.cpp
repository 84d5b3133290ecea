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

#include "nearviz/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>

#include "nearviz/bench.hpp"
#include "nearviz/gen_io.hpp"
#include "nearviz/ncl.hpp"
#include "nearviz/verify.hpp"

namespace nearviz {
namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

struct ColorArgs {
  std::string graph;
  std::string out;
  std::string stats_out;
  std::string trace;
  double epsilon = 0.5;
  double kappa_const = 50.0;
  double ell_const = 50.0;
  std::uint64_t kappa = 0;
  std::uint64_t ell = 0;
  std::uint64_t seed = 1;
  bool force = false;
  bool debug_check = false;
  unsigned retries = 0;
};

struct GenArgs {
  std::string model = "gnp";
  std::size_t n = 0;
  double p = 0.5;
  std::size_t d = 0;
  std::uint64_t seed = 1;
  std::string out;
};

struct VerifyArgs {
  std::string graph;
  std::string coloring;
  bool allow_partial = false;
};

struct BenchArgs {
  BenchSpec spec;
  std::uint64_t kappa = 0;
  std::uint64_t ell = 0;
  std::string out;
  std::string summary;
};

// Writes to `path`, or to `fallback` when the path is empty or "-".
template <typename F>
void emit(const std::string& path, std::ostream& fallback, F&& write) {
  if (path.empty() || path == "-") {
    write(fallback);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  write(file);
}

void add_run_options(CLI::App* cmd, double& epsilon, double& kappa_const,
                     double& ell_const, std::uint64_t& kappa,
                     std::uint64_t& ell, std::uint64_t& seed, bool& force) {
  cmd->add_option("--epsilon", epsilon, "palette slack in (0,1)")
      ->capture_default_str();
  cmd->add_option("--kappa-const", kappa_const,
                  "multiplier in kappa = c*ln(n)/eps")
      ->capture_default_str();
  cmd->add_option("--ell-const", ell_const,
                  "multiplier in ell = c*kappa^2*ln(n)/eps")
      ->capture_default_str();
  cmd->add_option("--kappa", kappa, "explicit palette sample count");
  cmd->add_option("--ell", ell, "explicit path length cap");
  cmd->add_option("--seed", seed, "random seed")
      ->envname("NEARVIZ_SEED")
      ->capture_default_str();
  cmd->add_flag("--force", force, "run below the degree regime");
}

RunConfig make_config(double epsilon, double kappa_const, double ell_const,
                      std::uint64_t kappa, std::uint64_t ell,
                      std::uint64_t seed, bool force) {
  RunConfig cfg;
  cfg.epsilon = epsilon;
  cfg.kappa_const = kappa_const;
  cfg.ell_const = ell_const;
  if (kappa > 0) cfg.kappa_override = kappa;
  if (ell > 0) cfg.ell_override = ell;
  cfg.seed = seed;
  cfg.force = force;
  return cfg;
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  Rng rng(a.seed);
  const Graph g = a.model == "gnp" ? gen_gnp(a.n, a.p, rng)
                                   : gen_near_regular(a.n, a.d, rng);
  emit(a.out, out, [&](std::ostream& os) { write_graph(g, os); });
  return kOk;
}

int cmd_color(const ColorArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = read_graph(std::filesystem::path(a.graph));
  RunConfig cfg = make_config(a.epsilon, a.kappa_const, a.ell_const, a.kappa,
                              a.ell, a.seed, a.force);
  cfg.debug_check = a.debug_check;
  cfg.validate();

  std::unique_ptr<std::ofstream> trace;
  if (!a.trace.empty()) {
    trace = std::make_unique<std::ofstream>(a.trace);
    if (!*trace) throw std::runtime_error("cannot write " + a.trace);
  }

  std::optional<RunResult> result;
  for (unsigned attempt = 0; attempt <= a.retries; ++attempt) {
    cfg.seed = attempt == 0 ? a.seed : derive_seed(a.seed, attempt);
    if (trace) *trace << "# attempt=" << attempt << " seed=" << cfg.seed << '\n';
    result = edge_color(g, cfg, trace.get());
    if (attempt == 0) {
      for (const auto& w : result->params.warnings) err << "warning: " << w << '\n';
    }
    if (result->success()) break;
    err << "attempt " << attempt << " (seed " << cfg.seed
        << ") failed: " << to_string(*result->stats.fail_reason) << '\n';
  }

  const Params& p = result->params;
  emit(a.stats_out, out, [&](std::ostream& os) {
    os << "# graph=" << a.graph << ' ' << cfg.describe() << " resolved_kappa="
       << p.kappa << " resolved_ell=" << p.ell << " q1=" << p.q1
       << " retries=" << a.retries << '\n'
       << stats_csv_header() << '\n'
       << stats_csv_row(result->stats) << '\n';
  });
  if (!result->success()) return kFailed;
  if (!a.out.empty()) {
    emit(a.out, out, [&](std::ostream& os) { write_coloring(*result->coloring, os); });
  }
  return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Graph g = read_graph(std::filesystem::path(a.graph));
  const std::vector<Color> colors =
      read_coloring(g, std::filesystem::path(a.coloring));
  if (auto bad = verify_proper(g, colors, !a.allow_partial)) {
    out << "VIOLATION " << bad->describe(g) << '\n';
    return kFailed;
  }
  const PaletteReport report = palette_report(colors);
  out << "OK edges=" << g.num_edges() << " delta=" << g.max_degree()
      << " colors=" << report.distinct << " max_color="
      << (report.max_color ? std::to_string(*report.max_color) : "none")
      << '\n';
  return kOk;
}

int cmd_bench(BenchArgs& a, std::ostream& out) {
  if (a.kappa > 0) a.spec.config.kappa_override = a.kappa;
  if (a.ell > 0) a.spec.config.ell_override = a.ell;
  const std::vector<BenchRow> rows = run_bench(a.spec);
  emit(a.out, out, [&](std::ostream& os) {
    os << bench_csv_header() << '\n';
    for (const BenchRow& r : rows) os << bench_csv_row(a.spec, r) << '\n';
  });
  if (!a.summary.empty()) {
    emit(a.summary, out, [&](std::ostream& os) {
      os << "n,median_m,median_millis,success_rate,max_residual_ratio\n";
      for (const SizeSummary& s : summarize(a.spec, rows)) {
        os << s.n << ',' << s.median_m << ',' << std::fixed
           << std::setprecision(3) << s.median_millis << ','
           << s.success_rate << ',' << s.max_residual_ratio << '\n'
           << std::defaultfloat;
      }
    });
  }
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Near-linear (1+eps)Delta edge coloring", "nearviz"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a random graph");
  gen_cmd->add_option("--model", gen.model)
      ->check(CLI::IsMember({"gnp", "regular"}))
      ->capture_default_str();
  gen_cmd->add_option("--n", gen.n, "vertex count")->required();
  gen_cmd->add_option("--p", gen.p, "edge probability (gnp)");
  gen_cmd->add_option("--d", gen.d, "target degree (regular)");
  gen_cmd->add_option("--seed", gen.seed)->envname("NEARVIZ_SEED");
  gen_cmd->add_option("--out", gen.out, "output edge list (default stdout)");

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "edge-color a graph");
  color_cmd->add_option("graph", color.graph, "input edge list")->required();
  add_run_options(color_cmd, color.epsilon, color.kappa_const, color.ell_const,
                  color.kappa, color.ell, color.seed, color.force);
  color_cmd->add_option("--retries", color.retries,
                        "re-seed and rerun up to N times on FAIL");
  color_cmd->add_flag("--debug-check", color.debug_check,
                      "rescan properness after every iteration");
  color_cmd->add_option("--out", color.out, "coloring output file");
  color_cmd->add_option("--stats-out", color.stats_out,
                        "stats output (default stdout)");
  color_cmd->add_option("--trace", color.trace,
                        "per-iteration augmentation trace file");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "check a coloring");
  verify_cmd->add_option("graph", verify.graph)->required();
  verify_cmd->add_option("coloring", verify.coloring)->required();
  verify_cmd->add_flag("--allow-partial", verify.allow_partial,
                       "accept blank edges");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "run seeded trials");
  bench_cmd->add_option("--model", bench.spec.model)
      ->check(CLI::IsMember({"gnp", "regular"}))
      ->capture_default_str();
  bench_cmd->add_option("--sizes", bench.spec.sizes, "vertex counts")
      ->delimiter(',')
      ->required();
  bench_cmd->add_option("--p", bench.spec.p);
  bench_cmd->add_option("--d", bench.spec.d);
  bench_cmd->add_option("--trials", bench.spec.trials)->capture_default_str();
  bench_cmd->add_option("--jobs", bench.spec.jobs)->capture_default_str();
  add_run_options(bench_cmd, bench.spec.config.epsilon,
                  bench.spec.config.kappa_const, bench.spec.config.ell_const,
                  bench.kappa, bench.ell, bench.spec.config.seed,
                  bench.spec.config.force);
  bench_cmd->add_option("--out", bench.out, "per-trial CSV (default stdout)");
  bench_cmd->add_option("--summary", bench.summary, "per-size summary CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*color_cmd) return cmd_color(color, out, err);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace nearviz
