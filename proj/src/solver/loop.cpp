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

#include "lcsp/solver/loop.hpp"

#include <cassert>

namespace lcsp {

LoopResult run_propagation_loop(PropState& st, const LoopOptions& opts,
                                int* appended) {
  const CnfFormula& formula = st.cond.formula();
  const Dag& dag = st.induced.dag();
  std::size_t before = st.trail.size();
  auto done = [&](LoopResult r) {
    if (appended) *appended = static_cast<int>(st.trail.size() - before);
    return r;
  };
  for (;;) {
    if (unit_propagate(st.cond, st.trail) == PropagateResult::EmptyClause) {
      return done(LoopResult::LogicInfeasible);
    }
    if (opts.pure_literal) {
      // Pure-literal assignments only satisfy clauses, so they cannot create
      // new unit clauses; no extra propagation round is needed for them.
      std::vector<Var> scope;
      for (Var v = 0; v < formula.num_vars(); ++v) {
        if (formula.kind(v) == VarKind::Free &&
            st.cond.value(v) == LBool::Undef) {
          scope.push_back(v);
        }
      }
      pure_literal_eliminate(st.cond, st.trail, scope);
    }

    std::vector<Lit> pending;
    for (std::size_t i = st.enforce_cursor; i < st.trail.size(); ++i) {
      Lit l = st.trail.lit_at(i);
      if (dag.variable_arc(l.var()) != kNoArc) pending.push_back(l);
    }
    st.enforce_cursor = st.trail.size();
    if (pending.empty()) break;

    EnforceResult er = st.induced.enforce(pending, st.trail);
    if (er.status != EnforceResult::Status::Ok) {
      return done(LoopResult::GraphInfeasible);
    }
    for (ArcId a : er.implied_forbidden) {
      Lit l = Lit::negative(dag.arc_variable(a));
      bool ok = st.trail.push(l, Reason::Enforcement);
      assert(ok);
      (void)ok;
      st.cond.apply(l);
    }
  }
  return done(LoopResult::Fixpoint);
}

}  // namespace lcsp
