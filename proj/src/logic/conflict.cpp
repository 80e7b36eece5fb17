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

#include "lcsp/logic/conflict.hpp"

#include <algorithm>
#include <cassert>

namespace lcsp {

CompletedAssignment::CompletedAssignment(const CnfFormula& formula,
                                         const VarDefinitions& defs,
                                         std::vector<LBool> base)
    : formula_(&formula),
      defs_(&defs),
      base_(std::move(base)),
      memo_(static_cast<std::size_t>(formula.num_vars()), LBool::Undef),
      computed_(static_cast<std::size_t>(formula.num_vars()), 0) {
  assert(base_.size() == static_cast<std::size_t>(formula.num_vars()));
}

LBool CompletedAssignment::value(Var v) const {
  std::size_t i = static_cast<std::size_t>(v);
  if (base_[i] != LBool::Undef) return base_[i];
  if (computed_[i]) return memo_[i];
  computed_[i] = 1;  // set before recursion; definitions are acyclic
  LBool result = LBool::Undef;
  const VarDefinition* def = defs_->find(v);
  if (def != nullptr) {
    bool any_undef = false;
    if (def->kind == DefKind::AllOf) {
      result = LBool::True;
      for (Lit l : def->lits) {
        LBool lv = value(l.var());
        if (lv == LBool::Undef) {
          any_undef = true;
        } else if (lv != lbool_of(l.is_positive())) {
          result = LBool::False;
          any_undef = false;
          break;
        }
      }
      if (result == LBool::True && any_undef) result = LBool::Undef;
    } else {
      result = LBool::False;
      for (Lit l : def->lits) {
        LBool lv = value(l.var());
        if (lv == LBool::Undef) {
          any_undef = true;
        } else if (lv == lbool_of(l.is_positive())) {
          result = LBool::True;
          any_undef = false;
          break;
        }
      }
      if (result == LBool::False && any_undef) result = LBool::Undef;
    }
  }
  memo_[i] = result;
  return result;
}

bool CompletedAssignment::clause_satisfied(const Clause& c) const {
  for (Lit l : c.lits) {
    if (satisfies(l)) return true;
  }
  return false;
}

std::vector<Lit> CompletedAssignment::to_literals() const {
  std::vector<Lit> out;
  for (Var v = 0; v < formula_->num_vars(); ++v) {
    LBool lv = value(v);
    if (lv != LBool::Undef) out.push_back(Lit::make(v, lv == LBool::True));
  }
  return out;
}

std::vector<int> violated_clauses(const ConditioningState& state,
                                  const CompletedAssignment& tentative) {
  std::vector<int> out;
  const CnfFormula& formula = state.formula();
  for (int ci = 0; ci < formula.num_clauses(); ++ci) {
    if (state.clause_satisfied(ci)) continue;
    if (!tentative.clause_satisfied(formula.clause(ci))) out.push_back(ci);
  }
  return out;
}

CompleteCheckResult complete_and_check(const ConditioningState& state,
                                       const CompletedAssignment& tentative) {
  std::vector<int> violated = violated_clauses(state, tentative);
  if (!violated.empty()) return {false, {}};
  return {true, tentative.to_literals()};
}

Conflict extract_conflict(const ConditioningState& state, const Trail& trail,
                          const CompletedAssignment& tentative,
                          ConflictFlavor flavor, const VarDefinitions* defs) {
  return extract_conflict(state, trail, tentative,
                          violated_clauses(state, tentative), flavor, defs);
}

Conflict extract_conflict(const ConditioningState& state, const Trail& trail,
                          const CompletedAssignment& tentative,
                          const std::vector<int>& violated,
                          ConflictFlavor flavor, const VarDefinitions* defs) {
  (void)tentative;
  const CnfFormula& formula = state.formula();
  std::vector<Var> vars;
  for (int ci : violated) {
    for (Lit l : formula.clause(ci).lits) {
      if (!trail.assigned(l.var())) vars.push_back(l.var());
    }
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

  if (flavor == ConflictFlavor::Standard) {
    return Conflict{std::move(vars), ConflictFlavor::Standard};
  }

  assert(defs != nullptr);
  std::vector<Var> expanded;
  for (Var v : vars) defs->expand_to_graph_vars(v, formula, expanded);
  std::erase_if(expanded, [&](Var v) { return trail.assigned(v); });
  std::sort(expanded.begin(), expanded.end());
  expanded.erase(std::unique(expanded.begin(), expanded.end()),
                 expanded.end());
  return Conflict{std::move(expanded), ConflictFlavor::GraphOnly};
}

}  // namespace lcsp
