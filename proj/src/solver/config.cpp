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

#include "lcsp/solver/config.hpp"

#include <vector>

#include "lcsp/errors.hpp"

namespace lcsp {

void SolverConfig::validate() const {
  if (branch_rule == BranchRule::Strong &&
      conflict_flavor != ConflictFlavor::GraphOnly) {
    throw ConfigError("strong branching requires graph conflicts");
  }
  if (!(epsilon > 0)) throw ConfigError("epsilon must be positive");
  if (strong_lookahead < 1) throw ConfigError("lookahead must be >= 1");
  if (!(cvds_decay > 0 && cvds_decay < 1)) {
    throw ConfigError("cvds decay must lie in (0,1)");
  }
  if (cvds_decay_interval < 1) throw ConfigError("cvds interval must be >= 1");
  if (!(rebuild_fraction > 0)) throw ConfigError("rebuild fraction must be > 0");
  if (plunge_depth_limit < 1) throw ConfigError("plunge depth must be >= 1");
}

std::string node_rule_name(NodeRule r) {
  switch (r) {
    case NodeRule::Dfs: return "dfs";
    case NodeRule::MostFeasible: return "most-feasible";
    case NodeRule::BestFirst: return "best-first";
    case NodeRule::BestFirstPlunge: return "plunge";
    case NodeRule::Projection: return "projection";
    case NodeRule::Hybrid: return "hybrid";
  }
  return "?";
}

std::string branch_rule_name(BranchRule r) {
  switch (r) {
    case BranchRule::Clause: return "clause";
    case BranchRule::Moms: return "moms";
    case BranchRule::Sup: return "sup";
    case BranchRule::Dup: return "dup";
    case BranchRule::Cvds: return "cvds";
    case BranchRule::Strong: return "strong";
  }
  return "?";
}

NodeRule node_rule_from_name(const std::string& name) {
  if (name == "dfs") return NodeRule::Dfs;
  if (name == "most-feasible") return NodeRule::MostFeasible;
  if (name == "best-first") return NodeRule::BestFirst;
  if (name == "plunge") return NodeRule::BestFirstPlunge;
  if (name == "projection") return NodeRule::Projection;
  if (name == "hybrid") return NodeRule::Hybrid;
  throw ConfigError("unknown node selection rule: " + name);
}

BranchRule branch_rule_from_name(const std::string& name) {
  if (name == "clause") return BranchRule::Clause;
  if (name == "moms") return BranchRule::Moms;
  if (name == "sup") return BranchRule::Sup;
  if (name == "dup") return BranchRule::Dup;
  if (name == "cvds") return BranchRule::Cvds;
  if (name == "strong") return BranchRule::Strong;
  throw ConfigError("unknown branching rule: " + name);
}

SolverConfig parse_config_string(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == '/') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  if (parts.size() < 3 || parts.size() > 4) {
    throw ConfigError("config string must be node/branch/flavor[/engine]: " +
                      text);
  }
  SolverConfig cfg;
  cfg.node_rule = node_rule_from_name(parts[0]);
  cfg.branch_rule = branch_rule_from_name(parts[1]);
  if (parts[2] == "standard") {
    cfg.conflict_flavor = ConflictFlavor::Standard;
  } else if (parts[2] == "graph") {
    cfg.conflict_flavor = ConflictFlavor::GraphOnly;
  } else {
    throw ConfigError("unknown conflict flavor: " + parts[2]);
  }
  if (parts.size() == 4) {
    if (parts[3] == "static") {
      cfg.sp_engine = SpEngineKind::Static;
    } else if (parts[3] == "lpa") {
      cfg.sp_engine = SpEngineKind::Lpa;
    } else {
      throw ConfigError("unknown engine: " + parts[3]);
    }
  }
  cfg.validate();
  return cfg;
}

std::string config_string(const SolverConfig& c) {
  std::string out = node_rule_name(c.node_rule) + "/" +
                    branch_rule_name(c.branch_rule) + "/";
  out += c.conflict_flavor == ConflictFlavor::Standard ? "standard" : "graph";
  out += c.sp_engine == SpEngineKind::Static ? "/static" : "/lpa";
  return out;
}

}  // namespace lcsp
