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

#ifndef LCSP_SOLVER_NODE_SELECTION_HPP
#define LCSP_SOLVER_NODE_SELECTION_HPP

#include <cstdint>
#include <span>

#include "lcsp/core.hpp"
#include "lcsp/solver/config.hpp"

namespace lcsp {

// Queue view of an open node. `relax` and `violated` describe the parent's
// relaxation (its path cost and the number of clauses that path violated).
struct OpenNode {
  std::int64_t id;
  std::int64_t parent;
  Cost relax;
  int violated;
  int depth;
};

struct SelectContext {
  std::int64_t current_node = -1;    // last processed node, -1 at the start
  std::int64_t current_parent = -1;  // its parent, for sibling lookup
  Cost incumbent_cost = kInfCost;
  Cost root_relax = 0;
  int root_violated = 0;
  bool root_solved = false;
  int plunge_depth = 0;      // consecutive plunge steps taken (hybrid)
  int plunge_limit = 4;
};

// Returns the index into `open` of the node the rule picks. Ties are broken
// first-in-first-out except for the stack-ordered rules (DFS and the plunge
// step), which take the most recently pushed match.
std::size_t select_node(std::span<const OpenNode> open, NodeRule rule,
                        const SelectContext& ctx);

}  // namespace lcsp

#endif  // LCSP_SOLVER_NODE_SELECTION_HPP
