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

#ifndef LCSP_LOGIC_TSEITIN_HPP
#define LCSP_LOGIC_TSEITIN_HPP

#include <span>
#include <utility>
#include <vector>

#include "lcsp/logic/cnf.hpp"
#include "lcsp/logic/definitions.hpp"

namespace lcsp {

// One conjunction of literals inside a DNF restriction.
struct DnfCube {
  std::vector<Lit> lits;
};

// A restriction is a disjunction of cubes; the instance demands the
// conjunction of all restrictions.
struct DnfRestriction {
  std::vector<DnfCube> cubes;
};

// Compiles the restrictions into `formula` by conjunction. For a restriction
// with cubes K_1..K_r, fresh free selector variables C_1..C_r are created,
// the clause {C_1,..,C_r} is added, and each cube contributes the clause
// {C_i, ~l_1,..,~l_k} plus the k binary clauses {~C_i, l_j}. Selector
// definitions (all-of over the cube literals) are recorded in `defs`.
//
// An empty cube is rejected (Error). A restriction with no cubes compiles to
// the empty clause, making the formula unsatisfiable.
void compile_dnf_restrictions(std::span<const DnfRestriction> restrictions,
                              CnfFormula& formula, VarDefinitions& defs);

// Convenience shape: builds a formula whose variables 0..num_graph_vars-1
// are graph variables and compiles the restrictions on top.
std::pair<CnfFormula, VarDefinitions> compile_dnf_restrictions(
    int num_graph_vars, std::span<const DnfRestriction> restrictions);

}  // namespace lcsp

#endif  // LCSP_LOGIC_TSEITIN_HPP
