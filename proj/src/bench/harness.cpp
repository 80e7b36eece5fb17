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

#include "lcsp/bench/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <thread>

namespace lcsp::bench {

namespace {

std::string status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::LimitReached: return "limit";
  }
  return "?";
}

std::string fmt_time(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", t);
  return buf;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LCSP_BENCH_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

double geometric_mean(std::span<const double> values) {
  if (values.empty()) return 0;
  double acc = 0;
  for (double v : values) acc += std::log(std::max(v, 1.0));
  return std::exp(acc / static_cast<double>(values.size()));
}

NamedConfig baseline_config() {
  SolverConfig cfg;
  cfg.node_rule = NodeRule::Dfs;
  cfg.branch_rule = BranchRule::Clause;
  cfg.conflict_flavor = ConflictFlavor::Standard;
  return NamedConfig{"baseline", cfg};
}

BenchReport run_benchmark(std::span<const BenchInstance> instances,
                          std::span<const NamedConfig> configs,
                          const BenchOptions& options) {
  std::vector<NamedConfig> all;
  all.push_back(baseline_config());
  for (const NamedConfig& c : configs) {
    if (c.name == "baseline") continue;
    all.push_back(c);
  }
  for (NamedConfig& c : all) {
    c.config.node_limit = options.node_limit;
    c.config.time_limit_s = options.time_limit_s;
  }

  const std::size_t n_tasks = instances.size() * all.size();
  std::vector<ResultRow> rows(n_tasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t task = next.fetch_add(1);
      if (task >= n_tasks) return;
      std::size_t ii = task / all.size();
      std::size_t ci = task % all.size();
      const BenchInstance& bi = instances[ii];
      const NamedConfig& nc = all[ci];
      ResultRow row;
      row.instance_id = bi.id;
      row.config = nc.name;
      try {
        SolveStats stats;
        Solution sol = solve(bi.instance, nc.config, &stats);
        row.status = sol.status;
        row.cost = sol.cost;
        row.nodes = stats.nodes;
        row.sp_searches = stats.sp_searches;
        row.arc_relaxations = stats.arc_relaxations;
        row.time_total_s = stats.time_total_s;
        row.time_sp_s = stats.time_sp_s;
      } catch (const std::exception& e) {
        row.status = SolveStatus::LimitReached;
        row.cost = kInfCost;
        row.nodes = row.sp_searches = row.arc_relaxations = 0;
        row.time_total_s = row.time_sp_s = 0;
        row.error = e.what();
      }
      rows[task] = std::move(row);
    }
  };
  int n_threads = std::min<int>(resolve_threads(options.threads),
                                static_cast<int>(std::max<std::size_t>(1, n_tasks)));
  std::vector<std::thread> pool;
  for (int i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  BenchReport report;
  report.rows = std::move(rows);

  // Triviality filter on the baseline rows.
  std::vector<char> trivial(instances.size(), 0);
  for (std::size_t ii = 0; ii < instances.size(); ++ii) {
    const ResultRow& base = report.rows[ii * all.size()];
    if (base.error.empty() && base.nodes < options.triviality_threshold) {
      trivial[ii] = 1;
      report.trivial_instances.push_back(instances[ii].id);
    }
  }

  for (std::size_t ci = 0; ci < all.size(); ++ci) {
    std::vector<double> nodes, sp, relax, time_total, time_sp;
    std::int64_t nodes_max = 0, sp_max = 0, relax_max = 0;
    for (std::size_t ii = 0; ii < instances.size(); ++ii) {
      if (trivial[ii]) continue;
      const ResultRow& r = report.rows[ii * all.size() + ci];
      if (!r.error.empty()) continue;
      nodes.push_back(static_cast<double>(r.nodes));
      sp.push_back(static_cast<double>(r.sp_searches));
      relax.push_back(static_cast<double>(r.arc_relaxations));
      time_total.push_back(r.time_total_s);
      time_sp.push_back(r.time_sp_s);
      nodes_max = std::max(nodes_max, r.nodes);
      sp_max = std::max(sp_max, r.sp_searches);
      relax_max = std::max(relax_max, r.arc_relaxations);
    }
    SummaryRow s;
    s.config = all[ci].name;
    s.instances = static_cast<int>(nodes.size());
    s.nodes_geomean = geometric_mean(nodes);
    s.nodes_max = nodes_max;
    s.sp_geomean = geometric_mean(sp);
    s.sp_max = sp_max;
    s.arc_relax_geomean = geometric_mean(relax);
    s.arc_relax_max = relax_max;
    s.time_total_geomean_s = geometric_mean(time_total);
    s.time_sp_geomean_s = geometric_mean(time_sp);
    report.summary.push_back(std::move(s));

    // Cumulative distribution of solved instances per metric value.
    for (const char* metric : {"nodes", "sp"}) {
      std::vector<std::int64_t> values;
      for (std::size_t ii = 0; ii < instances.size(); ++ii) {
        if (trivial[ii]) continue;
        const ResultRow& r = report.rows[ii * all.size() + ci];
        if (!r.error.empty() || r.status == SolveStatus::LimitReached) continue;
        values.push_back(metric == std::string("nodes") ? r.nodes
                                                        : r.sp_searches);
      }
      std::sort(values.begin(), values.end());
      std::size_t total = 0;
      for (std::size_t ii = 0; ii < instances.size(); ++ii) {
        if (!trivial[ii]) ++total;
      }
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i + 1 < values.size() && values[i + 1] == values[i]) continue;
        report.cdf.push_back(CdfPoint{
            all[ci].name, metric, values[i],
            total == 0 ? 0.0
                       : static_cast<double>(i + 1) / static_cast<double>(total)});
      }
    }
  }
  return report;
}

void write_rows_csv(std::ostream& out, std::span<const ResultRow> rows) {
  out << "instance,config,status,cost,nodes,sp_searches,arc_relaxations,"
         "time_total_s,time_sp_s\n";
  for (const ResultRow& r : rows) {
    out << r.instance_id << "," << r.config << "," << status_name(r.status)
        << "," << (r.cost == kInfCost ? std::string("inf") : cost_to_string(r.cost))
        << "," << r.nodes << "," << r.sp_searches << "," << r.arc_relaxations
        << "," << fmt_time(r.time_total_s) << "," << fmt_time(r.time_sp_s)
        << "\n";
  }
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
  out << "config,instances,nodes_geomean,nodes_max,sp_geomean,sp_max,"
         "arc_relax_geomean,arc_relax_max,time_total_geomean_s,"
         "time_sp_geomean_s\n";
  char buf[64];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return std::string(buf);
  };
  for (const SummaryRow& r : rows) {
    out << r.config << "," << r.instances << "," << fmt(r.nodes_geomean) << ","
        << r.nodes_max << "," << fmt(r.sp_geomean) << "," << r.sp_max << ","
        << fmt(r.arc_relax_geomean) << "," << r.arc_relax_max << ","
        << fmt(r.time_total_geomean_s) << "," << fmt(r.time_sp_geomean_s)
        << "\n";
  }
}

void write_cdf_csv(std::ostream& out, std::span<const CdfPoint> points) {
  char buf[64];
  out << "config,metric,value,fraction\n";
  for (const CdfPoint& p : points) {
    std::snprintf(buf, sizeof buf, "%.6f", p.fraction);
    out << p.config << "," << p.metric << "," << p.value << "," << buf << "\n";
  }
}

}  // namespace lcsp::bench
