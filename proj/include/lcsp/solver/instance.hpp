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

#ifndef LCSP_SOLVER_INSTANCE_HPP
#define LCSP_SOLVER_INSTANCE_HPP

#include <vector>

#include "lcsp/dag/dag.hpp"
#include "lcsp/logic/definitions.hpp"
#include "lcsp/logic/tseitin.hpp"

namespace lcsp {

// A problem instance: routing graph with endpoints and arc <-> variable
// mapping, the CNF constraints, and the definitions of compiled free
// variables. `restrictions` optionally carries the pre-compilation DNF
// restrictions (generator output keeps them so the brute-force reference can
// evaluate them directly). `heuristic` optionally carries per-vertex
// admissible remaining-cost bounds; empty means zero.
struct LcspInstance {
  Dag dag;
  CnfFormula formula;
  VarDefinitions defs;
  std::vector<DnfRestriction> restrictions;
  std::vector<Cost> heuristic;
};

}  // namespace lcsp

#endif  // LCSP_SOLVER_INSTANCE_HPP
