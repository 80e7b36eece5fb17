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

#include "lcsp/dag/shortest_path.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace lcsp {

namespace {

// Memoized lexmin arc sequence ending at v over label-tight arcs.
const std::vector<ArcId>& lexmin_to(
    VertexId v, VertexId s, const Dag& dag, std::span<const char> active,
    const std::vector<Cost>& dist,
    std::unordered_map<VertexId, std::vector<ArcId>>& memo) {
  auto it = memo.find(v);
  if (it != memo.end()) return it->second;
  std::vector<ArcId> best;
  bool have = false;
  if (v != s) {
    for (ArcId a : dag.in_arcs(v)) {
      if (!active[static_cast<std::size_t>(a)]) continue;
      const Arc& arc = dag.arc(a);
      Cost dt = dist[static_cast<std::size_t>(arc.tail)];
      if (dt == kInfCost) continue;
      if (cost_add(dt, arc.weight) != dist[static_cast<std::size_t>(v)])
        continue;
      std::vector<ArcId> cand =
          lexmin_to(arc.tail, s, dag, active, dist, memo);
      cand.push_back(a);
      if (!have || std::lexicographical_compare(cand.begin(), cand.end(),
                                                best.begin(), best.end())) {
        best = std::move(cand);
        have = true;
      }
    }
    assert(have);
  }
  return memo.emplace(v, std::move(best)).first->second;
}

}  // namespace

std::vector<ArcId> extract_lexmin_path(const Dag& dag,
                                       std::span<const char> active,
                                       const std::vector<Cost>& dist,
                                       VertexId s, VertexId t) {
  std::unordered_map<VertexId, std::vector<ArcId>> memo;
  return lexmin_to(t, s, dag, active, dist, memo);
}

SpOutcome shortest_path(const InducedDag& induced,
                        std::span<const Cost> heuristic, Cost incumbent_bound,
                        SpCounters* counters) {
  const Dag& dag = induced.dag();
  std::vector<Cost> dist(static_cast<std::size_t>(dag.num_vertices()),
                         kInfCost);
  VertexId s = dag.source();
  VertexId t = dag.target();
  dist[static_cast<std::size_t>(s)] = 0;
  bool pruned = false;
  std::int64_t relaxations = 0;
  for (VertexId v : dag.topo_order()) {
    Cost d = dist[static_cast<std::size_t>(v)];
    if (d == kInfCost) continue;
    if (v == t) break;  // labels of later-ranked vertices cannot matter
    Cost h = heuristic.empty() ? 0 : heuristic[static_cast<std::size_t>(v)];
    if (cost_add(d, h) >= incumbent_bound) {
      pruned = true;
      continue;
    }
    for (ArcId a : dag.out_arcs(v)) {
      if (!induced.arc_active(a)) continue;
      ++relaxations;
      const Arc& arc = dag.arc(a);
      Cost nd = cost_add(d, arc.weight);
      Cost& slot = dist[static_cast<std::size_t>(arc.head)];
      if (nd < slot) slot = nd;
    }
  }
  if (counters) counters->arc_relaxations += relaxations;

  SpOutcome out;
  Cost dt = dist[static_cast<std::size_t>(t)];
  if (dt == kInfCost) {
    out.status = pruned ? SpOutcome::Status::BoundExceeded
                        : SpOutcome::Status::Disconnected;
    return out;
  }
  if (dt >= incumbent_bound) {
    out.status = SpOutcome::Status::BoundExceeded;
    return out;
  }
  out.status = SpOutcome::Status::PathFound;
  out.path.arcs = extract_lexmin_path(dag, induced.active_mask(), dist, s, t);
  out.path.cost = dt;
  return out;
}

}  // namespace lcsp
