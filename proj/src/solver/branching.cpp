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

#include "lcsp/solver/branching.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace lcsp {

double product_score(double up, double down, double eps) {
  return std::max(eps, up) * std::max(eps, down);
}

Var moms_choice(const ConditioningState& state,
                std::span<const Var> conflict) {
  const CnfFormula& formula = state.formula();
  int min_size = std::numeric_limits<int>::max();
  for (int ci = 0; ci < formula.num_clauses(); ++ci) {
    if (state.clause_satisfied(ci)) continue;
    min_size = std::min(min_size, state.unassigned_count(ci));
  }
  Var best = kNoVar;
  int best_count = -1;
  for (Var v : conflict) {
    int count = 0;
    for (Lit l : {Lit::positive(v), Lit::negative(v)}) {
      for (int ci : formula.occurrences(l)) {
        if (!state.clause_satisfied(ci) &&
            state.unassigned_count(ci) == min_size) {
          ++count;
        }
      }
    }
    if (count > best_count) {
      best = v;
      best_count = count;
    }
  }
  return best;
}

Var clause_rule_choice(const ConditioningState& state,
                       std::span<const int> violated) {
  assert(!violated.empty());
  int best_ci = -1;
  int best_size = std::numeric_limits<int>::max();
  for (int ci : violated) {
    int size = state.unassigned_count(ci);
    if (size < best_size) {
      best_size = size;
      best_ci = ci;
    }
  }
  std::vector<Lit> reduced = state.reduced_clause(best_ci);
  assert(!reduced.empty());
  return reduced.front().var();
}

GammaPair sup_gammas(ConditioningState& state, Trail& trail, Var candidate) {
  GammaPair out;
  for (bool up : {true, false}) {
    Trail::Mark tm = trail.mark();
    ConditioningState::Mark cm = state.mark();
    Lit probe = Lit::make(candidate, up);
    bool ok = trail.push(probe, Reason::Decision);
    assert(ok);
    (void)ok;
    state.apply(probe);
    int count = 0;
    bool infeasible =
        unit_propagate(state, trail, &count) == PropagateResult::EmptyClause;
    trail.rollback(tm);
    state.rollback(cm);
    if (up) {
      out.up = count;
      out.up_infeasible = infeasible;
    } else {
      out.down = count;
      out.down_infeasible = infeasible;
    }
  }
  return out;
}

GammaPair dup_gammas(PropState& st, const LoopOptions& opts, Var candidate) {
  GammaPair out;
  for (bool up : {true, false}) {
    Trail::Mark tm = st.trail.mark();
    ConditioningState::Mark cm = st.cond.mark();
    InducedDag::Mark im = st.induced.mark();
    std::size_t cursor = st.enforce_cursor;
    Lit probe = Lit::make(candidate, up);
    bool ok = st.trail.push(probe, Reason::Decision);
    assert(ok);
    (void)ok;
    st.cond.apply(probe);
    int count = 0;
    LoopResult r = run_propagation_loop(st, opts, &count);
    st.trail.rollback(tm);
    st.cond.rollback(cm);
    st.induced.rollback(im);
    st.enforce_cursor = cursor;
    bool infeasible = r != LoopResult::Fixpoint;
    if (up) {
      out.up = count;
      out.up_infeasible = infeasible;
    } else {
      out.down = count;
      out.down_infeasible = infeasible;
    }
  }
  return out;
}

}  // namespace lcsp
