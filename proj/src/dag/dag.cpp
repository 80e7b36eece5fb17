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

#include "lcsp/dag/dag.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include "lcsp/errors.hpp"

namespace lcsp {

std::vector<int> topological_sort(int num_vertices,
                                  std::span<const Arc> arcs) {
  std::vector<int> indegree(static_cast<std::size_t>(num_vertices), 0);
  std::vector<std::vector<VertexId>> out(
      static_cast<std::size_t>(num_vertices));
  for (const Arc& a : arcs) {
    out[static_cast<std::size_t>(a.tail)].push_back(a.head);
    ++indegree[static_cast<std::size_t>(a.head)];
  }
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < num_vertices; ++v) {
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  std::vector<int> rank(static_cast<std::size_t>(num_vertices), -1);
  int next = 0;
  while (!ready.empty()) {
    VertexId v = ready.top();
    ready.pop();
    rank[static_cast<std::size_t>(v)] = next++;
    for (VertexId w : out[static_cast<std::size_t>(v)]) {
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
  }
  if (next != num_vertices) {
    throw CycleError("graph contains a cycle");
  }
  return rank;
}

Dag::Dag(int num_vertices, std::vector<Arc> arcs, VertexId source,
         VertexId target)
    : num_vertices_(num_vertices),
      arcs_(std::move(arcs)),
      out_(static_cast<std::size_t>(num_vertices)),
      in_(static_cast<std::size_t>(num_vertices)),
      from_source_(static_cast<std::size_t>(num_vertices), 0),
      to_target_(static_cast<std::size_t>(num_vertices), 0),
      source_(source),
      target_(target),
      arc_var_(arcs_.size(), kNoVar) {
  for (const Arc& a : arcs_) {
    assert(a.tail >= 0 && a.tail < num_vertices);
    assert(a.head >= 0 && a.head < num_vertices);
    if (a.weight < 0) throw Error("negative arc weight");
  }
  topo_rank_ = topological_sort(num_vertices, arcs_);
  topo_order_.resize(static_cast<std::size_t>(num_vertices));
  for (VertexId v = 0; v < num_vertices; ++v) {
    topo_order_[static_cast<std::size_t>(topo_rank_[static_cast<std::size_t>(
        v)])] = v;
  }
  for (ArcId a = 0; a < num_arcs(); ++a) {
    out_[static_cast<std::size_t>(arcs_[static_cast<std::size_t>(a)].tail)]
        .push_back(a);
    in_[static_cast<std::size_t>(arcs_[static_cast<std::size_t>(a)].head)]
        .push_back(a);
  }

  // Base-graph reachability, by topological sweep.
  from_source_[static_cast<std::size_t>(source_)] = 1;
  for (VertexId v : topo_order_) {
    if (!from_source_[static_cast<std::size_t>(v)]) continue;
    for (ArcId a : out_[static_cast<std::size_t>(v)]) {
      from_source_[static_cast<std::size_t>(
          arcs_[static_cast<std::size_t>(a)].head)] = 1;
    }
  }
  to_target_[static_cast<std::size_t>(target_)] = 1;
  for (auto it = topo_order_.rbegin(); it != topo_order_.rend(); ++it) {
    if (!to_target_[static_cast<std::size_t>(*it)]) continue;
    for (ArcId a : in_[static_cast<std::size_t>(*it)]) {
      to_target_[static_cast<std::size_t>(
          arcs_[static_cast<std::size_t>(a)].tail)] = 1;
    }
  }
}

void Dag::set_arc_variable(ArcId a, Var v) {
  assert(arc_var_[static_cast<std::size_t>(a)] == kNoVar);
  arc_var_[static_cast<std::size_t>(a)] = v;
  if (static_cast<std::size_t>(v) >= var_arc_.size()) {
    var_arc_.resize(static_cast<std::size_t>(v) + 1, kNoArc);
  }
  assert(var_arc_[static_cast<std::size_t>(v)] == kNoArc);
  var_arc_[static_cast<std::size_t>(v)] = a;
}

bool path_well_formed(const Dag& dag, const Path& p) {
  Cost total = 0;
  VertexId at = dag.source();
  for (ArcId a : p.arcs) {
    const Arc& arc = dag.arc(a);
    if (arc.tail != at) return false;
    at = arc.head;
    total = cost_add(total, arc.weight);
  }
  return at == dag.target() && total == p.cost;
}

}  // namespace lcsp
