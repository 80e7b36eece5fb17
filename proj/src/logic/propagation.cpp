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

#include "lcsp/logic/propagation.hpp"

#include <cassert>

namespace lcsp {

PropagateResult unit_propagate(ConditioningState& state, Trail& trail,
                               int* propagated_count) {
  int count = 0;
  for (;;) {
    if (state.has_empty_clause()) {
      if (propagated_count) *propagated_count = count;
      return PropagateResult::EmptyClause;
    }
    int ci = state.pop_unit_candidate();
    if (ci < 0) break;
    if (state.clause_satisfied(ci)) continue;
    if (state.unassigned_count(ci) != 1) continue;
    Lit l = state.sole_unassigned(ci);
    assert(l.valid());
    bool ok = trail.push(l, Reason::UnitPropagation);
    assert(ok);
    (void)ok;
    state.apply(l);
    ++count;
  }
  if (propagated_count) *propagated_count = count;
  return PropagateResult::Fixpoint;
}

int pure_literal_eliminate(ConditioningState& state, Trail& trail,
                           std::span<const Var> scope) {
  const CnfFormula& formula = state.formula();
  int added = 0;
  for (Var v : scope) {
    if (formula.kind(v) != VarKind::Free) continue;
    if (state.value(v) != LBool::Undef) continue;
    int pos = 0, neg = 0;
    for (int ci : formula.occurrences(Lit::positive(v))) {
      if (!state.clause_satisfied(ci)) ++pos;
    }
    for (int ci : formula.occurrences(Lit::negative(v))) {
      if (!state.clause_satisfied(ci)) ++neg;
    }
    Lit chosen = kNoLit;
    if (pos > 0 && neg == 0) chosen = Lit::positive(v);
    if (neg > 0 && pos == 0) chosen = Lit::negative(v);
    if (!chosen.valid()) continue;
    bool ok = trail.push(chosen, Reason::PureLiteral);
    assert(ok);
    (void)ok;
    state.apply(chosen);
    ++added;
  }
  return added;
}

}  // namespace lcsp
