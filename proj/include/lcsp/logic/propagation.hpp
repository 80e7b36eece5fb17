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

#ifndef LCSP_LOGIC_PROPAGATION_HPP
#define LCSP_LOGIC_PROPAGATION_HPP

#include <span>

#include "lcsp/logic/conditioning.hpp"
#include "lcsp/logic/trail.hpp"

namespace lcsp {

enum class PropagateResult { Fixpoint, EmptyClause };

// Repeatedly assigns the sole unassigned literal of unit clauses until no
// unit clause remains (clause-index FIFO order) or the empty clause appears.
// Every assigned literal is appended to the trail with the unit-propagation
// reason and applied to the conditioning state.
PropagateResult unit_propagate(ConditioningState& state, Trail& trail,
                               int* propagated_count = nullptr);

// Single pass over `scope`: a variable whose literal occurs in remaining
// clauses in only one polarity gets that literal appended (pure-literal
// reason). Graph variables are skipped; assigning them would change the
// routing graph. Returns the number of appended literals.
int pure_literal_eliminate(ConditioningState& state, Trail& trail,
                           std::span<const Var> scope);

}  // namespace lcsp

#endif  // LCSP_LOGIC_PROPAGATION_HPP
