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

// Two-stage (1+eps)Delta edge coloring.
//
// Stage 1 colors edges one at a time with truncated Vizing chains over a
// floor((1+eps/2)Delta) palette, uncoloring ("flagging") one edge whenever a
// chain's path hits the length cap. Stage 2 colors the flagged edges with the
// randomized greedy over 3*Delta(G*) fresh colors.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nearviz/coloring.hpp"
#include "nearviz/graph.hpp"
#include "nearviz/rng.hpp"

namespace nearviz {

struct RunConfig {
  double epsilon = 0.5;
  double kappa_const = 50.0;
  double ell_const = 50.0;
  std::optional<std::uint64_t> kappa_override;
  std::optional<std::uint64_t> ell_override;
  std::uint64_t seed = 1;
  /// Run even when Delta is below the degree regime.
  bool force = false;
  /// Full properness and index rescan after every stage-1 iteration.
  bool debug_check = false;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
  /// One-line `key=value` echo of every field.
  std::string describe() const;
};

/// Delta is below 500 ln(n) / eps and the run was not forced.
class RegimeError : public std::invalid_argument {
 public:
  RegimeError(std::size_t delta, double threshold);
  double threshold() const noexcept { return threshold_; }

 private:
  double threshold_;
};

struct Params {
  Color q1 = 0;
  std::uint64_t kappa = 0;
  std::uint64_t ell = 0;
  double regime_threshold = 0.0;
  bool regime_ok = false;
  std::vector<std::string> warnings;
};

/// ceil(c * ln_n / eps).
std::uint64_t compute_kappa(double ln_n, double eps, double c);
/// ceil(c * kappa^2 * ln_n / eps).
std::uint64_t compute_ell(std::uint64_t kappa, double ln_n, double eps,
                          double c);
/// floor(x), treating values within 1e-9 below an integer as that integer so
/// that e.g. 1.15 * 200 gives 230.
std::uint64_t floor_tolerant(double x);
/// floor((1 + eps/2) * Delta).
Color stage1_palette(std::size_t delta, double eps);
/// floor((1 + eps) * Delta), the advertised final palette.
Color target_palette(std::size_t delta, double eps);

/// Throws std::invalid_argument for n < 2 and RegimeError when Delta is below
/// 500 ln(n)/eps without `force`.
Params resolve_params(const Graph& g, const RunConfig& cfg);

/// kappa uniform draws from [1, q1], sorted and deduplicated.
std::vector<Color> sample_palette(Color q1, std::uint64_t kappa, Rng& rng);

/// Edge ids still to be processed, with O(1) uniform pick and O(1) removal.
class UncoloredPool {
 public:
  explicit UncoloredPool(std::size_t m);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  bool contains(EdgeId e) const noexcept {
    return e < position_.size() && position_[e] != kAbsent;
  }
  EdgeId pick(Rng& rng) const;
  void remove(EdgeId e);

 private:
  static constexpr std::uint32_t kAbsent = UINT32_MAX;
  std::vector<EdgeId> items_;
  std::vector<std::uint32_t> position_;
};

enum class FailReason { kStage1Fan, kStage1Beta, kStage2Degree };

std::string_view to_string(FailReason reason);

struct RunStats {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t delta = 0;
  double epsilon = 0.0;
  Color q1 = 0;
  std::uint64_t kappa = 0;
  std::uint64_t ell = 0;
  std::uint64_t seed = 0;

  std::size_t iterations = 0;
  std::vector<EdgeId> flagged_edges;
  std::vector<std::uint32_t> residual_degrees;
  std::size_t max_residual_degree = 0;
  std::size_t stage1_colors = 0;
  std::size_t total_colors = 0;
  std::optional<Color> max_color;
  std::optional<FailReason> fail_reason;
  std::size_t debug_rescans = 0;
  double stage1_millis = 0.0;
  double stage2_millis = 0.0;

  bool success() const noexcept { return !fail_reason.has_value(); }
};

struct Stage1Result {
  PartialColoring coloring;
  RunStats stats;
};

/// Stage 1: exactly m iterations unless a chain construction fails, in which
/// case stats.fail_reason is set and the partial state is returned as is.
/// `trace`, when given, receives one line per iteration.
Stage1Result stage1(const Graph& g, const RunConfig& cfg, const Params& params,
                    Rng& rng, std::ostream* trace = nullptr);

struct ResidualGraph {
  Graph graph;
  /// Residual edge id -> edge id in the source graph.
  std::vector<EdgeId> source_edge;
};

/// Subgraph on the same vertex set made of the blank edges of `c`.
ResidualGraph residual_subgraph(const Graph& g, const PartialColoring& c);

struct RunResult {
  /// Complete coloring on success; nullopt on FAIL.
  std::optional<PartialColoring> coloring;
  RunStats stats;
  Params params;

  bool success() const noexcept { return stats.success(); }
};

/// Full two-stage run. FAIL is reported through stats.fail_reason and never
/// retried here. Throws for invalid configurations and RegimeError.
RunResult edge_color(const Graph& g, const RunConfig& cfg,
                     std::ostream* trace = nullptr);

/// Column names of the stats CSV.
std::string_view stats_csv_header();
/// One CSV row; timing columns are the last two.
std::string stats_csv_row(const RunStats& s);

}  // namespace nearviz
