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

#ifndef LCSP_LOGIC_CONDITIONING_HPP
#define LCSP_LOGIC_CONDITIONING_HPP

#include <cstddef>
#include <deque>
#include <vector>

#include "lcsp/logic/cnf.hpp"
#include "lcsp/logic/trail.hpp"

namespace lcsp {

// Incremental view of the formula conditioned on a sequence of literals.
// Instead of materializing the reduced formula, we keep per-clause counts of
// unassigned literals and satisfying literals plus a literal stack for undo.
// A clause with a positive satisfied-count is deleted from the view; a clause
// with zero unassigned literals and no satisfying literal is the empty clause.
//
// Clauses that become unit are queued in clause-index order as they appear.
// Rollback drops pending unit candidates, so callers must only roll back to
// marks taken at propagation fixpoints (drained queue).
class ConditioningState {
 public:
  explicit ConditioningState(const CnfFormula& formula);
  ConditioningState(const CnfFormula& formula, const Trail& trail);

  struct Mark {
    std::size_t applied;
  };

  Mark mark() const { return Mark{applied_.size()}; }

  void apply(Lit l);
  void rollback(Mark m);

  bool has_empty_clause() const { return empty_clauses_ > 0; }
  bool clause_satisfied(int ci) const {
    return satisfied_count_[static_cast<std::size_t>(ci)] > 0;
  }
  int unassigned_count(int ci) const {
    return unassigned_count_[static_cast<std::size_t>(ci)];
  }

  LBool value(Var v) const { return value_[static_cast<std::size_t>(v)]; }

  // Clause indices not satisfied under the applied literals, ascending.
  std::vector<int> remaining_clauses() const;

  // Unassigned literals of a non-satisfied clause (the reduced clause).
  std::vector<Lit> reduced_clause(int ci) const;

  // Unit-candidate queue. pop_unit_candidate() returns -1 when drained;
  // entries may be stale and must be revalidated by the consumer.
  int pop_unit_candidate();
  Lit sole_unassigned(int ci) const;

  const CnfFormula& formula() const { return *formula_; }

 private:
  const CnfFormula* formula_;
  std::vector<int> unassigned_count_;
  std::vector<int> satisfied_count_;
  std::vector<LBool> value_;
  std::vector<Lit> applied_;
  std::deque<int> unit_queue_;
  int empty_clauses_ = 0;
};

}  // namespace lcsp

#endif  // LCSP_LOGIC_CONDITIONING_HPP
