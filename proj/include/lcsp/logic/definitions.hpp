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

#ifndef LCSP_LOGIC_DEFINITIONS_HPP
#define LCSP_LOGIC_DEFINITIONS_HPP

#include <unordered_map>
#include <vector>

#include "lcsp/logic/cnf.hpp"

namespace lcsp {

// Connective of a defined free variable. Restriction selector variables are
// conjunctions of their DNF clause's literals; flight aggregates are
// disjunctions over arc variables.
enum class DefKind : std::uint8_t { AllOf, AnyOf };

struct VarDefinition {
  DefKind kind;
  std::vector<Lit> lits;
};

// Maps each defined free variable to the literals it stands for. Each
// variable is defined at most once; definitions reference only graph
// variables or previously defined free variables (acyclic by construction).
class VarDefinitions {
 public:
  void define(Var v, DefKind kind, std::vector<Lit> lits);

  bool defined(Var v) const { return defs_.count(v) > 0; }
  const VarDefinition* find(Var v) const {
    auto it = defs_.find(v);
    return it == defs_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return defs_.size(); }
  bool empty() const { return defs_.empty(); }

  // Defined variables in ascending id order (for canonical serialization).
  std::vector<Var> defined_vars_sorted() const;

  // All graph variables reachable through the definition of `v` (v itself if
  // it is a graph variable). Appends to `out`, unsorted, may repeat.
  void expand_to_graph_vars(Var v, const CnfFormula& formula,
                            std::vector<Var>& out) const;

 private:
  std::unordered_map<Var, VarDefinition> defs_;
};

}  // namespace lcsp

#endif  // LCSP_LOGIC_DEFINITIONS_HPP
