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

#ifndef LCSP_DAG_SHORTEST_PATH_HPP
#define LCSP_DAG_SHORTEST_PATH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lcsp/dag/induced.hpp"

namespace lcsp {

struct SpOutcome {
  enum class Status { PathFound, Disconnected, BoundExceeded };
  Status status = Status::Disconnected;
  Path path;
};

struct SpCounters {
  std::int64_t arc_relaxations = 0;
};

// One-to-one shortest path over the active arcs by a single label pass in
// topological order. `heuristic` is a per-vertex admissible lower bound on
// the remaining cost (empty span = zeros); vertices whose label plus bound
// reaches `incumbent_bound` are not expanded. Ties are broken toward the
// lexicographically smallest arc-id sequence.
SpOutcome shortest_path(const InducedDag& induced,
                        std::span<const Cost> heuristic, Cost incumbent_bound,
                        SpCounters* counters = nullptr);

// Lexicographically smallest arc sequence among the cost-optimal s,t-paths
// visible through exact distance labels (dist[v] = min over active in-arcs
// of dist[tail] + weight wherever finite). Shared by both engines.
std::vector<ArcId> extract_lexmin_path(const Dag& dag,
                                       std::span<const char> active,
                                       const std::vector<Cost>& dist,
                                       VertexId s, VertexId t);

}  // namespace lcsp

#endif  // LCSP_DAG_SHORTEST_PATH_HPP
