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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nearviz/ncl.hpp"

namespace nearviz {

struct BenchSpec {
  std::string model = "gnp";  // "gnp" or "regular"
  std::vector<std::size_t> sizes;  // vertex counts
  double p = 0.5;
  std::size_t d = 0;
  std::size_t trials = 1;
  RunConfig config;
  std::size_t jobs = 1;

  void validate() const;
};

struct BenchRow {
  std::size_t size_index = 0;
  std::size_t trial = 0;
  std::uint64_t graph_seed = 0;
  RunStats stats;

  double wall_millis() const { return stats.stage1_millis + stats.stage2_millis; }
};

/// Trial t of size s has index i = s * trials + t; its graph is generated
/// from derive_seed(seed, 2i) and the coloring run uses derive_seed(seed,
/// 2i + 1). Trials run on up to `jobs` threads; row order does not depend on
/// scheduling.
std::vector<BenchRow> run_bench(const BenchSpec& spec);

std::string bench_csv_header();
std::string bench_csv_row(const BenchSpec& spec, const BenchRow& row);

struct SizeSummary {
  std::size_t n = 0;
  double median_m = 0.0;
  double median_millis = 0.0;
  double success_rate = 0.0;
  /// Max over successful trials of Delta(G*) / Delta; 0 when none succeeded.
  double max_residual_ratio = 0.0;
};

std::vector<SizeSummary> summarize(const BenchSpec& spec,
                                   const std::vector<BenchRow>& rows);

double median(std::vector<double> values);

}  // namespace nearviz
