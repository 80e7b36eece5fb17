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

#ifndef LCSP_DAG_INDUCED_HPP
#define LCSP_DAG_INDUCED_HPP

#include <span>
#include <utility>
#include <vector>

#include "lcsp/dag/dag.hpp"
#include "lcsp/logic/trail.hpp"

namespace lcsp {

struct EnforceResult {
  enum class Status { Ok, Contradiction, Infeasible };
  Status status = Status::Ok;
  // Arcs deactivated in this call whose mapped variables are unassigned;
  // the caller appends their negated variables to the trail.
  std::vector<ArcId> implied_forbidden;
};

// Subgraph of the base dag under a partial assignment, kept as an active-arc
// mask with a deletion journal for exact rollback. Forbidden arcs are
// deactivated directly; enforcing an arc (u,v) turns it into a bridge by
// deactivating the other out-arcs of u and every arc jumping over u in the
// topological order.
class InducedDag {
 public:
  explicit InducedDag(const Dag& dag);

  struct Mark {
    std::size_t deleted;
    std::size_t enforced;
  };

  Mark mark() const { return Mark{deleted_stack_.size(), enforced_.size()}; }
  void rollback(const Mark& m);

  // Processes graph literals (literals over unmapped variables are skipped).
  // On Contradiction or Infeasible the state is partially modified; the
  // caller is expected to roll back to the pre-call mark.
  EnforceResult enforce(std::span<const Lit> lits, const Trail& trail);

  bool arc_active(ArcId a) const {
    return active_[static_cast<std::size_t>(a)] != 0;
  }
  int active_arc_count() const { return active_count_; }
  std::span<const char> active_mask() const { return active_; }
  std::span<const ArcId> enforced_arcs() const { return enforced_; }

  const Dag& dag() const { return *dag_; }

 private:
  void deactivate(ArcId a, const Trail& trail, EnforceResult& result);

  const Dag* dag_;
  std::vector<char> active_;
  std::vector<char> enforced_flag_;
  std::vector<ArcId> deleted_stack_;
  std::vector<ArcId> enforced_;
  int active_count_;
};

// Builds the induced graph of a whole trail in one shot.
std::pair<InducedDag, EnforceResult> enforce_trail(const Dag& dag,
                                                   const Trail& trail);

// True iff every arc of the path is active; used to keep the parent optimum
// without a new search.
bool path_in_graph(const Path& p, const InducedDag& induced);

}  // namespace lcsp

#endif  // LCSP_DAG_INDUCED_HPP
