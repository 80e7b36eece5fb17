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

#include "lcsp/dag/induced.hpp"

#include <cassert>

namespace lcsp {

InducedDag::InducedDag(const Dag& dag)
    : dag_(&dag),
      active_(static_cast<std::size_t>(dag.num_arcs()), 1),
      enforced_flag_(static_cast<std::size_t>(dag.num_arcs()), 0),
      active_count_(dag.num_arcs()) {}

void InducedDag::rollback(const Mark& m) {
  while (deleted_stack_.size() > m.deleted) {
    ArcId a = deleted_stack_.back();
    deleted_stack_.pop_back();
    active_[static_cast<std::size_t>(a)] = 1;
    ++active_count_;
  }
  while (enforced_.size() > m.enforced) {
    enforced_flag_[static_cast<std::size_t>(enforced_.back())] = 0;
    enforced_.pop_back();
  }
}

void InducedDag::deactivate(ArcId a, const Trail& trail,
                            EnforceResult& result) {
  std::size_t i = static_cast<std::size_t>(a);
  if (!active_[i]) return;
  active_[i] = 0;
  --active_count_;
  deleted_stack_.push_back(a);
  Var v = dag_->arc_variable(a);
  if (v == kNoVar) return;
  switch (trail.value(v)) {
    case LBool::True:
      result.status = EnforceResult::Status::Contradiction;
      break;
    case LBool::Undef:
      result.implied_forbidden.push_back(a);
      break;
    case LBool::False:
      break;
  }
}

EnforceResult InducedDag::enforce(std::span<const Lit> lits,
                                  const Trail& trail) {
  EnforceResult result;
  const Dag& dag = *dag_;
  for (Lit l : lits) {
    ArcId a = dag.variable_arc(l.var());
    if (a == kNoArc) continue;
    std::size_t ai = static_cast<std::size_t>(a);
    if (!l.is_positive()) {
      if (!active_[ai]) continue;
      assert(!enforced_flag_[ai]);
      deactivate(a, trail, result);
      if (result.status != EnforceResult::Status::Ok) return result;
      continue;
    }
    // Enforce arc a = (u,v) as a bridge.
    if (!active_[ai]) {
      result.status = EnforceResult::Status::Contradiction;
      return result;
    }
    if (enforced_flag_[ai]) continue;
    const Arc& arc = dag.arc(a);
    // An enforced arc outside the source->target topological span, or one
    // whose endpoints cannot lie on any source-target path of the base
    // graph, leaves no surviving path that agrees with the trail.
    if (dag.topo_rank(arc.tail) < dag.topo_rank(dag.source()) ||
        dag.topo_rank(arc.head) > dag.topo_rank(dag.target()) ||
        !dag.reachable_from_source(arc.tail) ||
        !dag.reaches_target(arc.head)) {
      result.status = EnforceResult::Status::Infeasible;
      return result;
    }
    enforced_flag_[ai] = 1;
    enforced_.push_back(a);
    for (ArcId b : dag.out_arcs(arc.tail)) {
      if (b == a) continue;
      deactivate(b, trail, result);
      if (result.status != EnforceResult::Status::Ok) return result;
    }
    int u_rank = dag.topo_rank(arc.tail);
    for (ArcId b = 0; b < dag.num_arcs(); ++b) {
      if (!active_[static_cast<std::size_t>(b)]) continue;
      const Arc& other = dag.arc(b);
      if (dag.topo_rank(other.tail) < u_rank &&
          dag.topo_rank(other.head) > u_rank) {
        deactivate(b, trail, result);
        if (result.status != EnforceResult::Status::Ok) return result;
      }
    }
  }
  return result;
}

std::pair<InducedDag, EnforceResult> enforce_trail(const Dag& dag,
                                                   const Trail& trail) {
  InducedDag induced(dag);
  std::vector<Lit> lits;
  lits.reserve(trail.size());
  for (std::size_t i = 0; i < trail.size(); ++i) lits.push_back(trail.lit_at(i));
  EnforceResult result = induced.enforce(lits, trail);
  return {std::move(induced), std::move(result)};
}

bool path_in_graph(const Path& p, const InducedDag& induced) {
  for (ArcId a : p.arcs) {
    if (!induced.arc_active(a)) return false;
  }
  return true;
}

}  // namespace lcsp
