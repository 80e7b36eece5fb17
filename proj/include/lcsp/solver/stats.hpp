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

#ifndef LCSP_SOLVER_STATS_HPP
#define LCSP_SOLVER_STATS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lcsp/dag/dag.hpp"
#include "lcsp/logic/cnf.hpp"

namespace lcsp {

enum class SolveStatus { Optimal, Infeasible, LimitReached };

struct Solution {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<Path> path;
  Cost cost = kInfCost;
  std::vector<Lit> witness;  // satisfying complete assignment, when Optimal
};

struct SolveStats {
  std::int64_t nodes = 0;
  std::int64_t sp_searches = 0;
  std::int64_t arc_relaxations = 0;
  std::int64_t parent_path_reuses = 0;

  // Every dequeued node lands in exactly one bucket.
  std::int64_t pruned_by_bound = 0;
  std::int64_t logic_infeasible = 0;
  std::int64_t graph_infeasible = 0;
  std::int64_t incumbent_updates = 0;
  std::int64_t branched = 0;

  std::int64_t duplicate_relaxation_paths = 0;

  double time_total_s = 0;
  double time_sp_s = 0;

  // (nodes processed when found, incumbent cost) per improvement.
  std::vector<std::pair<std::int64_t, Cost>> incumbent_history;

  // Largest dual bound dequeued before the final incumbent improvement.
  Cost max_relax_before_last_incumbent = 0;

  // Dynamic engine diagnostics.
  std::int64_t lpa_underconsistent_pops = 0;
  std::int64_t lpa_reopens = 0;
  int lpa_max_in_scans_per_vertex = 0;
  bool lpa_keys_monotone = true;
};

}  // namespace lcsp

#endif  // LCSP_SOLVER_STATS_HPP
