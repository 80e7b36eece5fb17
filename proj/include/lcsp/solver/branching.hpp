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

#ifndef LCSP_SOLVER_BRANCHING_HPP
#define LCSP_SOLVER_BRANCHING_HPP

#include <span>

#include "lcsp/logic/conflict.hpp"
#include "lcsp/solver/config.hpp"
#include "lcsp/solver/cvds.hpp"
#include "lcsp/solver/loop.hpp"

namespace lcsp {

// max(eps, up) * max(eps, down); the floor keeps one-sided information from
// collapsing the score to zero.
double product_score(double up, double down, double eps);

// Highest-occurrence variable (either polarity) among the candidates over
// the minimum-size remaining clauses; ties to the smallest id.
Var moms_choice(const ConditioningState& state, std::span<const Var> conflict);

// Variable of the first literal in the smallest violated clause (reduced
// size; ties to the lowest clause index).
Var clause_rule_choice(const ConditioningState& state,
                       std::span<const int> violated);

struct GammaPair {
  double up = 0;
  double down = 0;
  bool up_infeasible = false;
  bool down_infeasible = false;
};

// Shallow probe: one unit-propagation round per branch, counting propagated
// literals. State is restored before returning.
GammaPair sup_gammas(ConditioningState& state, Trail& trail, Var candidate);

// Deep probe: the full propagation-enforcement loop per branch.
GammaPair dup_gammas(PropState& st, const LoopOptions& opts, Var candidate);

}  // namespace lcsp

#endif  // LCSP_SOLVER_BRANCHING_HPP
