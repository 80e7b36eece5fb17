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

#ifndef LCSP_SOLVER_BNB_HPP
#define LCSP_SOLVER_BNB_HPP

#include <memory>
#include <optional>
#include <unordered_set>

#include "lcsp/dynsp/lpa.hpp"
#include "lcsp/solver/branching.hpp"
#include "lcsp/solver/instance.hpp"
#include "lcsp/solver/node_selection.hpp"
#include "lcsp/solver/stats.hpp"

namespace lcsp {

// Branch-and-bound driver. Each node is an assignment; processing a node
// runs the propagation-enforcement loop to a fixpoint, solves the shortest
// path relaxation with incumbent pruning (reusing the parent's path when it
// survives), checks the induced tentative assignment against the formula,
// and either updates the incumbent or branches on a conflict variable.
class BnbSolver {
 public:
  BnbSolver(const LcspInstance& instance, SolverConfig config);

  Solution solve();
  const SolveStats& stats() const { return stats_; }

 private:
  using NodeId = std::int64_t;
  static constexpr NodeId kNoNode = -1;

  struct Node {
    NodeId parent = kNoNode;
    Lit branch_lit = kNoLit;
    int depth = 0;
    Cost relax = 0;    // parent's relaxation value (dual bound)
    int violated = 0;  // clauses violated by the parent's path
    std::shared_ptr<const Path> parent_path;
    // Fixpoint marks, valid while the node sits on the active chain.
    Trail::Mark trail_mark{};
    ConditioningState::Mark cond_mark{};
    InducedDag::Mark induced_mark{};
    std::size_t enforce_cursor_mark = 0;
  };

  // Node processing steps.
  void activate_ancestors(NodeId id);
  LoopResult run_own_fixpoint(NodeId id);
  SpOutcome relax_node(NodeId id, bool* reused);
  Var pick_branch_variable(const Conflict& conflict,
                           const std::vector<int>& violated, Cost path_cost);
  Var strong_branch_choice(std::span<const Var> conflict, Cost path_cost);
  double probe_gamma_cost(Lit probe, Cost base_cost, bool* infeasible);
  GraphDiff diff_against_engine() const;
  void record_relaxation_path(const Path& p);
  bool limits_hit() const;

  const LcspInstance& inst_;
  SolverConfig cfg_;

  Trail trail_;
  ConditioningState cond_;
  InducedDag induced_;
  std::size_t enforce_cursor_ = 0;
  std::optional<LpaEngine> lpa_;
  std::optional<CvdsScores> cvds_;

  std::vector<Node> nodes_;
  std::vector<NodeId> open_;          // insertion order
  std::vector<NodeId> active_chain_;  // root..leaf with valid marks

  // Incumbent.
  std::shared_ptr<const Path> best_path_;
  Cost best_cost_ = kInfCost;
  std::vector<Lit> best_witness_;

  // Projection context.
  Cost root_relax_ = 0;
  int root_violated_ = 0;
  bool root_solved_ = false;
  NodeId current_node_ = kNoNode;
  int plunge_depth_ = 0;

  // Duplicate relaxation-path detection (exact sequences).
  struct PathHash {
    std::size_t operator()(const std::vector<ArcId>& v) const;
  };
  std::unordered_set<std::vector<ArcId>, PathHash> seen_paths_;

  SolveStats stats_;
  double start_time_ = 0;
};

// Convenience entry point.
Solution solve(const LcspInstance& instance, const SolverConfig& config,
               SolveStats* stats = nullptr);

}  // namespace lcsp

#endif  // LCSP_SOLVER_BNB_HPP
