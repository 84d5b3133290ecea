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

#include "nearviz/bench.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "nearviz/gen_io.hpp"

namespace nearviz {

void BenchSpec::validate() const {
  if (model != "gnp" && model != "regular") {
    throw std::invalid_argument("model must be 'gnp' or 'regular'");
  }
  if (sizes.empty()) throw std::invalid_argument("at least one size is required");
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  if (model == "gnp" && !(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must lie in [0, 1]");
  }
  config.validate();
}

std::vector<BenchRow> run_bench(const BenchSpec& spec) {
  spec.validate();
  const std::size_t total = spec.sizes.size() * spec.trials;
  std::vector<BenchRow> rows(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        BenchRow& row = rows[i];
        row.size_index = i / spec.trials;
        row.trial = i % spec.trials;
        row.graph_seed = derive_seed(spec.config.seed, 2 * i);
        const std::size_t n = spec.sizes[row.size_index];
        Rng graph_rng(row.graph_seed);
        const Graph g = spec.model == "gnp" ? gen_gnp(n, spec.p, graph_rng)
                                            : gen_near_regular(n, spec.d, graph_rng);
        RunConfig cfg = spec.config;
        cfg.seed = derive_seed(spec.config.seed, 2 * i + 1);
        row.stats = edge_color(g, cfg).stats;
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = total;
      }
    }
  };

  const std::size_t threads = std::min(spec.jobs, total);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return rows;
}

std::string bench_csv_header() {
  return "model,size,trial,graph_seed," + std::string(stats_csv_header());
}

std::string bench_csv_row(const BenchSpec& spec, const BenchRow& row) {
  return spec.model + ',' + std::to_string(spec.sizes[row.size_index]) + ',' +
         std::to_string(row.trial) + ',' + std::to_string(row.graph_seed) +
         ',' + stats_csv_row(row.stats);
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid]
                                 : (values[mid - 1] + values[mid]) / 2.0;
}

std::vector<SizeSummary> summarize(const BenchSpec& spec,
                                   const std::vector<BenchRow>& rows) {
  std::vector<SizeSummary> out;
  for (std::size_t s = 0; s < spec.sizes.size(); ++s) {
    SizeSummary sum;
    sum.n = spec.sizes[s];
    std::vector<double> ms;
    std::vector<double> times;
    std::size_t ok = 0;
    for (const BenchRow& r : rows) {
      if (r.size_index != s) continue;
      ms.push_back(static_cast<double>(r.stats.m));
      times.push_back(r.wall_millis());
      if (r.stats.success()) {
        ++ok;
        if (r.stats.delta > 0) {
          sum.max_residual_ratio =
              std::max(sum.max_residual_ratio,
                       static_cast<double>(r.stats.max_residual_degree) /
                           static_cast<double>(r.stats.delta));
        }
      }
    }
    sum.median_m = median(ms);
    sum.median_millis = median(times);
    sum.success_rate = ms.empty() ? 0.0 : static_cast<double>(ok) / ms.size();
    out.push_back(sum);
  }
  return out;
}

}  // namespace nearviz
