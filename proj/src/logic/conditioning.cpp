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

#include "lcsp/logic/conditioning.hpp"

#include <cassert>

namespace lcsp {

ConditioningState::ConditioningState(const CnfFormula& formula)
    : formula_(&formula),
      unassigned_count_(static_cast<std::size_t>(formula.num_clauses())),
      satisfied_count_(static_cast<std::size_t>(formula.num_clauses()), 0),
      value_(static_cast<std::size_t>(formula.num_vars()), LBool::Undef) {
  for (int ci = 0; ci < formula.num_clauses(); ++ci) {
    int n = formula.clause(ci).size();
    unassigned_count_[static_cast<std::size_t>(ci)] = n;
    if (n == 0) ++empty_clauses_;
    if (n == 1) unit_queue_.push_back(ci);
  }
}

ConditioningState::ConditioningState(const CnfFormula& formula,
                                     const Trail& trail)
    : ConditioningState(formula) {
  for (std::size_t i = 0; i < trail.size(); ++i) apply(trail.lit_at(i));
}

void ConditioningState::apply(Lit l) {
  assert(value_[static_cast<std::size_t>(l.var())] == LBool::Undef);
  value_[static_cast<std::size_t>(l.var())] = lbool_of(l.is_positive());
  applied_.push_back(l);
  for (int ci : formula_->occurrences(l)) {
    ++satisfied_count_[static_cast<std::size_t>(ci)];
  }
  for (int ci : formula_->occurrences(~l)) {
    std::size_t c = static_cast<std::size_t>(ci);
    int n = --unassigned_count_[c];
    if (satisfied_count_[c] == 0) {
      if (n == 1) unit_queue_.push_back(ci);
      if (n == 0) ++empty_clauses_;
    }
  }
}

void ConditioningState::rollback(Mark m) {
  assert(m.applied <= applied_.size());
  if (m.applied == applied_.size()) return;
  unit_queue_.clear();
  while (applied_.size() > m.applied) {
    Lit l = applied_.back();
    applied_.pop_back();
    value_[static_cast<std::size_t>(l.var())] = LBool::Undef;
    for (int ci : formula_->occurrences(~l)) {
      std::size_t c = static_cast<std::size_t>(ci);
      int n = ++unassigned_count_[c];
      if (satisfied_count_[c] == 0 && n == 1) --empty_clauses_;
    }
    for (int ci : formula_->occurrences(l)) {
      --satisfied_count_[static_cast<std::size_t>(ci)];
    }
  }
}

std::vector<int> ConditioningState::remaining_clauses() const {
  std::vector<int> out;
  for (int ci = 0; ci < formula_->num_clauses(); ++ci) {
    if (!clause_satisfied(ci)) out.push_back(ci);
  }
  return out;
}

std::vector<Lit> ConditioningState::reduced_clause(int ci) const {
  std::vector<Lit> out;
  for (Lit l : formula_->clause(ci).lits) {
    if (value(l.var()) == LBool::Undef) out.push_back(l);
  }
  return out;
}

int ConditioningState::pop_unit_candidate() {
  if (unit_queue_.empty()) return -1;
  int ci = unit_queue_.front();
  unit_queue_.pop_front();
  return ci;
}

Lit ConditioningState::sole_unassigned(int ci) const {
  for (Lit l : formula_->clause(ci).lits) {
    if (value(l.var()) == LBool::Undef) return l;
  }
  return kNoLit;
}

}  // namespace lcsp
