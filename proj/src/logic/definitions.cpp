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

#include "lcsp/logic/definitions.hpp"

#include <algorithm>

#include "lcsp/errors.hpp"

namespace lcsp {

void VarDefinitions::define(Var v, DefKind kind, std::vector<Lit> lits) {
  if (defined(v)) {
    throw Error("variable " + std::to_string(v) + " defined twice");
  }
  defs_.emplace(v, VarDefinition{kind, std::move(lits)});
}

std::vector<Var> VarDefinitions::defined_vars_sorted() const {
  std::vector<Var> out;
  out.reserve(defs_.size());
  for (const auto& [v, def] : defs_) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

void VarDefinitions::expand_to_graph_vars(Var v, const CnfFormula& formula,
                                          std::vector<Var>& out) const {
  if (formula.kind(v) == VarKind::Graph) {
    out.push_back(v);
    return;
  }
  const VarDefinition* def = find(v);
  if (def == nullptr) return;  // undefined free variable: no expansion
  for (Lit l : def->lits) expand_to_graph_vars(l.var(), formula, out);
}

}  // namespace lcsp
