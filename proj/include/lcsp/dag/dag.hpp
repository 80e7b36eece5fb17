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

#ifndef LCSP_DAG_DAG_HPP
#define LCSP_DAG_DAG_HPP

#include <span>
#include <vector>

#include "lcsp/core.hpp"
#include "lcsp/logic/cnf.hpp"

namespace lcsp {

struct Arc {
  VertexId tail;
  VertexId head;
  Cost weight;  // non-negative
};

// Deterministic topological ranks via Kahn's method with smallest-vertex-id
// tie-breaking. Throws CycleError when the graph has a cycle.
std::vector<int> topological_sort(int num_vertices, std::span<const Arc> arcs);

// Weighted acyclic routing graph, immutable after construction. Carries the
// topological order, base-graph reachability from the source and to the
// target, and the partial arc <-> graph-variable mapping.
class Dag {
 public:
  Dag(int num_vertices, std::vector<Arc> arcs, VertexId source,
      VertexId target);

  int num_vertices() const { return num_vertices_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const Arc& arc(ArcId a) const { return arcs_[static_cast<std::size_t>(a)]; }
  std::span<const ArcId> out_arcs(VertexId v) const {
    return out_[static_cast<std::size_t>(v)];
  }
  std::span<const ArcId> in_arcs(VertexId v) const {
    return in_[static_cast<std::size_t>(v)];
  }

  int topo_rank(VertexId v) const {
    return topo_rank_[static_cast<std::size_t>(v)];
  }
  // Vertices in topological order (rank -> vertex).
  std::span<const VertexId> topo_order() const { return topo_order_; }

  VertexId source() const { return source_; }
  VertexId target() const { return target_; }

  bool reachable_from_source(VertexId v) const {
    return from_source_[static_cast<std::size_t>(v)] != 0;
  }
  bool reaches_target(VertexId v) const {
    return to_target_[static_cast<std::size_t>(v)] != 0;
  }

  // sigma: injective partial mapping between arcs and graph variables.
  void set_arc_variable(ArcId a, Var v);
  Var arc_variable(ArcId a) const {
    return arc_var_[static_cast<std::size_t>(a)];
  }
  ArcId variable_arc(Var v) const {
    std::size_t i = static_cast<std::size_t>(v);
    return i < var_arc_.size() ? var_arc_[i] : kNoArc;
  }

 private:
  int num_vertices_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<ArcId>> out_;  // ascending arc id
  std::vector<std::vector<ArcId>> in_;
  std::vector<int> topo_rank_;
  std::vector<VertexId> topo_order_;
  std::vector<char> from_source_;
  std::vector<char> to_target_;
  VertexId source_;
  VertexId target_;
  std::vector<Var> arc_var_;
  std::vector<ArcId> var_arc_;
};

// Arc sequence from source to target; weight is the sum of member weights.
struct Path {
  std::vector<ArcId> arcs;
  Cost cost = 0;

  bool operator==(const Path& o) const {
    return arcs == o.arcs && cost == o.cost;
  }
};

bool path_well_formed(const Dag& dag, const Path& p);

}  // namespace lcsp

#endif  // LCSP_DAG_DAG_HPP
