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

#ifndef LCSP_SOLVER_LOOP_HPP
#define LCSP_SOLVER_LOOP_HPP

#include "lcsp/dag/induced.hpp"
#include "lcsp/logic/conditioning.hpp"
#include "lcsp/logic/propagation.hpp"

namespace lcsp {

enum class LoopResult { Fixpoint, LogicInfeasible, GraphInfeasible };

// Mutable subproblem state shared by the solver and the deep probing rules.
// `enforce_cursor` is the trail index of the first literal not yet handed to
// the induced graph; it rolls back together with the other marks.
struct PropState {
  Trail& trail;
  ConditioningState& cond;
  InducedDag& induced;
  std::size_t& enforce_cursor;
};

struct LoopOptions {
  bool pure_literal = false;
};

// Alternates unit propagation (plus optional pure-literal elimination on
// free variables) with literal enforcement in the graph, feeding newly
// deleted arcs back as negated variables, until neither side makes progress.
// On a non-fixpoint result the state is left dirty; callers roll back.
LoopResult run_propagation_loop(PropState& st, const LoopOptions& opts,
                                int* appended = nullptr);

}  // namespace lcsp

#endif  // LCSP_SOLVER_LOOP_HPP
