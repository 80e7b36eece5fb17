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

#include "lcsp/oracle/brute_force.hpp"

#include <algorithm>

#include "lcsp/errors.hpp"

namespace lcsp::oracle {

namespace {

std::int64_t count_paths(const Dag& dag, std::int64_t cap) {
  std::vector<std::int64_t> count(
      static_cast<std::size_t>(dag.num_vertices()), 0);
  count[static_cast<std::size_t>(dag.source())] = 1;
  for (VertexId v : dag.topo_order()) {
    std::int64_t c = count[static_cast<std::size_t>(v)];
    if (c == 0) continue;
    for (ArcId a : dag.out_arcs(v)) {
      std::int64_t& slot = count[static_cast<std::size_t>(dag.arc(a).head)];
      slot = std::min<std::int64_t>(cap + 1, slot + c);
    }
  }
  return count[static_cast<std::size_t>(dag.target())];
}

struct EnumeratedPath {
  Cost cost;
  std::vector<ArcId> arcs;
};

void enumerate_paths(const Dag& dag, VertexId at, Cost cost,
                     std::vector<ArcId>& stack,
                     std::vector<EnumeratedPath>& out) {
  if (at == dag.target()) {
    out.push_back(EnumeratedPath{cost, stack});
    return;
  }
  for (ArcId a : dag.out_arcs(at)) {
    stack.push_back(a);
    enumerate_paths(dag, dag.arc(a).head, cost_add(cost, dag.arc(a).weight),
                    stack, out);
    stack.pop_back();
  }
}

// Truth of a DNF literal under the path and a noise assignment.
bool eval_lit(const LcspInstance& inst, const std::vector<char>& on_path,
              const std::vector<LBool>& noise, Lit l) {
  ArcId a = inst.dag.variable_arc(l.var());
  bool value;
  if (a != kNoArc) {
    value = on_path[static_cast<std::size_t>(a)] != 0;
  } else {
    value = noise[static_cast<std::size_t>(l.var())] == LBool::True;
  }
  return value == l.is_positive();
}

bool restrictions_satisfiable(const LcspInstance& inst,
                              const std::vector<char>& on_path,
                              const std::vector<Var>& noise_vars,
                              std::vector<LBool>& noise,
                              std::vector<Lit>* witness) {
  std::uint64_t combos = 1ull << noise_vars.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    for (std::size_t i = 0; i < noise_vars.size(); ++i) {
      noise[static_cast<std::size_t>(noise_vars[i])] =
          (mask >> i) & 1 ? LBool::True : LBool::False;
    }
    bool all = true;
    for (const DnfRestriction& r : inst.restrictions) {
      bool any = false;
      for (const DnfCube& cube : r.cubes) {
        bool cube_true = true;
        for (Lit l : cube.lits) {
          if (!eval_lit(inst, on_path, noise, l)) {
            cube_true = false;
            break;
          }
        }
        if (cube_true) {
          any = true;
          break;
        }
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) {
      if (witness) {
        for (std::size_t i = 0; i < noise_vars.size(); ++i) {
          witness->push_back(Lit::make(noise_vars[i], (mask >> i) & 1));
        }
      }
      return true;
    }
  }
  return false;
}

bool cnf_satisfiable(const LcspInstance& inst,
                     const std::vector<char>& on_path,
                     const std::vector<Var>& free_vars,
                     std::vector<LBool>& values, std::vector<Lit>* witness) {
  const CnfFormula& f = inst.formula;
  std::uint64_t combos = 1ull << free_vars.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    for (std::size_t i = 0; i < free_vars.size(); ++i) {
      values[static_cast<std::size_t>(free_vars[i])] =
          (mask >> i) & 1 ? LBool::True : LBool::False;
    }
    bool ok = true;
    for (int ci = 0; ci < f.num_clauses() && ok; ++ci) {
      bool sat = false;
      for (Lit l : f.clause(ci).lits) {
        LBool v = values[static_cast<std::size_t>(l.var())];
        if (v == lbool_of(l.is_positive())) {
          sat = true;
          break;
        }
      }
      ok = sat;
    }
    if (ok) {
      if (witness) {
        for (std::size_t i = 0; i < free_vars.size(); ++i) {
          witness->push_back(Lit::make(free_vars[i], (mask >> i) & 1));
        }
      }
      return true;
    }
  }
  (void)on_path;
  return false;
}

}  // namespace

Solution brute_force_solve(const LcspInstance& inst,
                           const OracleGuards& guards) {
  const Dag& dag = inst.dag;
  if (count_paths(dag, guards.max_paths) > guards.max_paths) {
    throw TooLargeError("instance exceeds the path enumeration guard");
  }

  std::vector<EnumeratedPath> paths;
  std::vector<ArcId> stack;
  enumerate_paths(dag, dag.source(), 0, stack, paths);
  std::stable_sort(paths.begin(), paths.end(),
                   [](const EnumeratedPath& a, const EnumeratedPath& b) {
                     return a.cost < b.cost;
                   });

  const bool use_restrictions = !inst.restrictions.empty();
  std::vector<Var> free_vars;
  if (use_restrictions) {
    for (const DnfRestriction& r : inst.restrictions) {
      for (const DnfCube& c : r.cubes) {
        for (Lit l : c.lits) {
          if (inst.dag.variable_arc(l.var()) == kNoArc) {
            free_vars.push_back(l.var());
          }
        }
      }
    }
    std::sort(free_vars.begin(), free_vars.end());
    free_vars.erase(std::unique(free_vars.begin(), free_vars.end()),
                    free_vars.end());
  } else {
    for (Var v = 0; v < inst.formula.num_vars(); ++v) {
      if (inst.formula.kind(v) == VarKind::Free) free_vars.push_back(v);
    }
  }
  if (static_cast<int>(free_vars.size()) > guards.max_free_vars) {
    throw TooLargeError("instance exceeds the free-variable guard");
  }

  std::vector<LBool> scratch(
      static_cast<std::size_t>(inst.formula.num_vars()), LBool::Undef);
  std::vector<char> on_path(static_cast<std::size_t>(dag.num_arcs()), 0);
  for (const EnumeratedPath& p : paths) {
    std::fill(on_path.begin(), on_path.end(), 0);
    for (ArcId a : p.arcs) on_path[static_cast<std::size_t>(a)] = 1;
    std::vector<Lit> extra;
    bool feasible;
    if (use_restrictions) {
      feasible =
          restrictions_satisfiable(inst, on_path, free_vars, scratch, &extra);
    } else {
      for (Var v = 0; v < inst.formula.num_vars(); ++v) {
        if (inst.formula.kind(v) != VarKind::Graph) continue;
        ArcId a = inst.dag.variable_arc(v);
        scratch[static_cast<std::size_t>(v)] =
            a != kNoArc && on_path[static_cast<std::size_t>(a)]
                ? LBool::True
                : LBool::False;
      }
      feasible = cnf_satisfiable(inst, on_path, free_vars, scratch, &extra);
    }
    if (feasible) {
      Solution sol;
      sol.status = SolveStatus::Optimal;
      sol.path = Path{p.arcs, p.cost};
      sol.cost = p.cost;
      for (Var v = 0; v < inst.formula.num_vars(); ++v) {
        ArcId a = inst.dag.variable_arc(v);
        if (a != kNoArc) {
          sol.witness.push_back(
              Lit::make(v, on_path[static_cast<std::size_t>(a)] != 0));
        }
      }
      sol.witness.insert(sol.witness.end(), extra.begin(), extra.end());
      return sol;
    }
  }
  Solution sol;
  sol.status = SolveStatus::Infeasible;
  return sol;
}

}  // namespace lcsp::oracle
