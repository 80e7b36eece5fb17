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

#include "lcsp/logic/cnf.hpp"

#include <algorithm>
#include <cassert>

namespace lcsp {

Var add_var_impl(std::vector<VarKind>& kinds, std::vector<std::vector<int>>& occ,
                 VarKind kind) {
  kinds.push_back(kind);
  occ.emplace_back();
  occ.emplace_back();
  return static_cast<Var>(kinds.size()) - 1;
}

Var CnfFormula::add_var(VarKind kind) {
  return add_var_impl(kinds_, occ_, kind);
}

void CnfFormula::add_vars(int count, VarKind kind) {
  for (int i = 0; i < count; ++i) add_var(kind);
}

int CnfFormula::add_clause(std::vector<Lit> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 0; i + 1 < lits.size(); ++i) {
    if (lits[i].var() == lits[i + 1].var()) {
      ++dropped_tautologies_;
      return -1;
    }
  }
  int ci = static_cast<int>(clauses_.size());
  for (Lit l : lits) {
    assert(l.var() >= 0 && l.var() < num_vars());
    occ_[static_cast<std::size_t>(l.index())].push_back(ci);
  }
  clauses_.push_back(Clause{std::move(lits)});
  return ci;
}

int CnfFormula::occurrence_count(Var v) const {
  return static_cast<int>(occurrences(Lit::positive(v)).size() +
                          occurrences(Lit::negative(v)).size());
}

}  // namespace lcsp
