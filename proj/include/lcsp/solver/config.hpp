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

#ifndef LCSP_SOLVER_CONFIG_HPP
#define LCSP_SOLVER_CONFIG_HPP

#include <cstdint>
#include <limits>
#include <string>

#include "lcsp/logic/conflict.hpp"

namespace lcsp {

enum class NodeRule {
  Dfs,
  MostFeasible,
  BestFirst,
  BestFirstPlunge,
  Projection,
  Hybrid,
};

enum class BranchRule { Clause, Moms, Sup, Dup, Cvds, Strong };

enum class SpEngineKind { Static, Lpa };

struct SolverConfig {
  NodeRule node_rule = NodeRule::BestFirst;
  BranchRule branch_rule = BranchRule::Sup;
  ConflictFlavor conflict_flavor = ConflictFlavor::GraphOnly;
  SpEngineKind sp_engine = SpEngineKind::Lpa;

  bool parent_path_check = true;
  bool pure_literal = false;

  double epsilon = 1e-6;             // product-rule floor
  int strong_lookahead = 8;          // L, working-limit look-ahead
  double strong_gamma_cap = 1e9;     // weight units standing in for infinity
  double up_gamma_cap = 1e6;         // propagation count standing in for infinity

  double cvds_bump = 1.0;
  double cvds_decay = 0.95;
  int cvds_decay_interval = 256;

  int plunge_depth_limit = 4;        // hybrid node selection
  double rebuild_fraction = 0.25;    // dynamic engine escape hatch

  std::int64_t node_limit = std::numeric_limits<std::int64_t>::max();
  double time_limit_s = std::numeric_limits<double>::infinity();

  // Throws ConfigError on invalid combinations (strong branching demands
  // graph conflicts; epsilon > 0; lookahead >= 1; decay in (0,1)).
  void validate() const;
};

std::string node_rule_name(NodeRule r);
std::string branch_rule_name(BranchRule r);
NodeRule node_rule_from_name(const std::string& name);
BranchRule branch_rule_from_name(const std::string& name);

// "node/branch/flavor[/engine]" e.g. "best-first/sup/graph/lpa".
SolverConfig parse_config_string(const std::string& text);
std::string config_string(const SolverConfig& c);

}  // namespace lcsp

#endif  // LCSP_SOLVER_CONFIG_HPP
