// Copyright 2026 The LCSP Solver Authors
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

#ifndef LCSP_BENCH_HARNESS_HPP
#define LCSP_BENCH_HARNESS_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lcsp/solver/bnb.hpp"

namespace lcsp::bench {

struct BenchInstance {
  std::string id;
  LcspInstance instance;
};

struct NamedConfig {
  std::string name;
  SolverConfig config;
};

struct ResultRow {
  std::string instance_id;
  std::string config;
  SolveStatus status;
  Cost cost;
  std::int64_t nodes;
  std::int64_t sp_searches;
  std::int64_t arc_relaxations;
  double time_total_s;
  double time_sp_s;
  std::string error;  // per-instance failures are recorded, never fatal
};

struct SummaryRow {
  std::string config;
  int instances;
  double nodes_geomean;
  std::int64_t nodes_max;
  double sp_geomean;
  std::int64_t sp_max;
  double arc_relax_geomean;
  std::int64_t arc_relax_max;
  double time_total_geomean_s;
  double time_sp_geomean_s;
};

struct CdfPoint {
  std::string config;
  std::string metric;  // "nodes" or "sp"
  std::int64_t value;
  double fraction;  // solved share of non-trivial instances at <= value
};

struct BenchOptions {
  std::int64_t node_limit = 1'000'000;
  double time_limit_s = 60.0;
  int triviality_threshold = 10;  // baseline nodes below this drop out
  int threads = 0;                // 0: LCSP_BENCH_THREADS or hardware
};

struct BenchReport {
  std::vector<ResultRow> rows;          // every (instance, config) pair
  std::vector<SummaryRow> summary;      // over non-trivial instances
  std::vector<CdfPoint> cdf;
  std::vector<std::string> trivial_instances;
};

// The canonical baseline configuration (uninformed depth-first search with
// clause branching on standard conflicts); always run, used for the
// triviality filter.
NamedConfig baseline_config();

BenchReport run_benchmark(std::span<const BenchInstance> instances,
                          std::span<const NamedConfig> configs,
                          const BenchOptions& options);

void write_rows_csv(std::ostream& out, std::span<const ResultRow> rows);
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);
void write_cdf_csv(std::ostream& out, std::span<const CdfPoint> points);

double geometric_mean(std::span<const double> values);

}  // namespace lcsp::bench

#endif  // LCSP_BENCH_HARNESS_HPP
