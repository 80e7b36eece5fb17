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

#include "lcsp/logic/tseitin.hpp"

#include "lcsp/errors.hpp"

namespace lcsp {

void compile_dnf_restrictions(std::span<const DnfRestriction> restrictions,
                              CnfFormula& formula, VarDefinitions& defs) {
  for (const DnfRestriction& r : restrictions) {
    for (const DnfCube& cube : r.cubes) {
      if (cube.lits.empty()) {
        throw Error("restriction contains an empty clause");
      }
    }
    std::vector<Lit> top;
    std::vector<Var> selectors;
    selectors.reserve(r.cubes.size());
    for (const DnfCube& cube : r.cubes) {
      Var c = formula.add_var(VarKind::Free);
      selectors.push_back(c);
      top.push_back(Lit::positive(c));
      defs.define(c, DefKind::AllOf, cube.lits);
    }
    formula.add_clause(top);
    for (std::size_t i = 0; i < r.cubes.size(); ++i) {
      Var c = selectors[i];
      std::vector<Lit> long_clause;
      long_clause.reserve(r.cubes[i].lits.size() + 1);
      long_clause.push_back(Lit::positive(c));
      for (Lit l : r.cubes[i].lits) long_clause.push_back(~l);
      formula.add_clause(std::move(long_clause));
      for (Lit l : r.cubes[i].lits) {
        formula.add_clause({Lit::negative(c), l});
      }
    }
  }
}

std::pair<CnfFormula, VarDefinitions> compile_dnf_restrictions(
    int num_graph_vars, std::span<const DnfRestriction> restrictions) {
  CnfFormula formula;
  formula.add_vars(num_graph_vars, VarKind::Graph);
  VarDefinitions defs;
  compile_dnf_restrictions(restrictions, formula, defs);
  return {std::move(formula), std::move(defs)};
}

}  // namespace lcsp
