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

#ifndef LCSP_LOGIC_CONFLICT_HPP
#define LCSP_LOGIC_CONFLICT_HPP

#include <vector>

#include "lcsp/logic/conditioning.hpp"
#include "lcsp/logic/definitions.hpp"
#include "lcsp/logic/trail.hpp"

namespace lcsp {

enum class ConflictFlavor : std::uint8_t { Standard, GraphOnly };

struct Conflict {
  std::vector<Var> vars;  // ascending, unassigned in the trail
  ConflictFlavor flavor = ConflictFlavor::Standard;

  bool empty() const { return vars.empty(); }
};

// Tentative assignment extended by the forced values of defined free
// variables: a selector is true iff all literals of its clause hold, an
// aggregate is true iff any of its arc literals holds. Evaluation is
// three-valued and memoized; variables that are neither assigned in the base
// nor defined stay undefined.
class CompletedAssignment {
 public:
  CompletedAssignment(const CnfFormula& formula, const VarDefinitions& defs,
                      std::vector<LBool> base);

  LBool value(Var v) const;
  bool satisfies(Lit l) const {
    return value(l.var()) == lbool_of(l.is_positive());
  }
  bool clause_satisfied(const Clause& c) const;

  // Literals of all assigned variables, ascending by id.
  std::vector<Lit> to_literals() const;

  const CnfFormula& formula() const { return *formula_; }

 private:
  const CnfFormula* formula_;
  const VarDefinitions* defs_;
  std::vector<LBool> base_;
  mutable std::vector<LBool> memo_;
  mutable std::vector<char> computed_;
};

// Clauses of the conditioned view that the tentative assignment fails to
// satisfy, ascending. Empty iff the tentative assignment satisfies the
// conditioned formula.
std::vector<int> violated_clauses(const ConditioningState& state,
                                  const CompletedAssignment& tentative);

struct CompleteCheckResult {
  bool satisfied;
  std::vector<Lit> witness;  // populated when satisfied
};

CompleteCheckResult complete_and_check(const ConditioningState& state,
                                       const CompletedAssignment& tentative);

// Standard flavor: every variable, unassigned in `trail`, of a conditioned
// clause the tentative assignment leaves unsatisfied. Graph flavor maps each
// defined free variable of the standard conflict to the graph variables it
// expands to and keeps graph variables; the result is again restricted to
// variables unassigned in the trail and may be empty when the violated
// clauses involve only undefined free variables.
Conflict extract_conflict(const ConditioningState& state, const Trail& trail,
                          const CompletedAssignment& tentative,
                          ConflictFlavor flavor, const VarDefinitions* defs);

Conflict extract_conflict(const ConditioningState& state, const Trail& trail,
                          const CompletedAssignment& tentative,
                          const std::vector<int>& violated,
                          ConflictFlavor flavor, const VarDefinitions* defs);

}  // namespace lcsp

#endif  // LCSP_LOGIC_CONFLICT_HPP
