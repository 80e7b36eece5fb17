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

#ifndef LCSP_TESTS_TESTUTIL_HPP
#define LCSP_TESTS_TESTUTIL_HPP

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "lcsp/dag/induced.hpp"
#include "lcsp/logic/cnf.hpp"
#include "lcsp/logic/conditioning.hpp"
#include "lcsp/logic/trail.hpp"

namespace lcsp::test {

// DIMACS-style literal: L(1) = var 0 positive, L(-2) = var 1 negative.
inline Lit L(int signed_one_based) {
  Var v = (signed_one_based < 0 ? -signed_one_based : signed_one_based) - 1;
  return Lit::make(v, signed_one_based > 0);
}

inline CnfFormula make_formula(int num_vars,
                               const std::vector<std::vector<int>>& clauses,
                               const std::vector<Var>& graph_vars = {}) {
  CnfFormula f;
  for (Var v = 0; v < num_vars; ++v) {
    bool graph = std::find(graph_vars.begin(), graph_vars.end(), v) !=
                 graph_vars.end();
    f.add_var(graph ? VarKind::Graph : VarKind::Free);
  }
  for (const auto& c : clauses) {
    std::vector<Lit> lits;
    for (int sl : c) lits.push_back(L(sl));
    f.add_clause(std::move(lits));
  }
  return f;
}

// Reduced clauses of the conditioned view as a canonical set-of-sets.
inline std::set<std::vector<int>> remaining_set(const ConditioningState& st) {
  std::set<std::vector<int>> out;
  for (int ci : st.remaining_clauses()) {
    std::vector<int> c;
    for (Lit l : st.reduced_clause(ci)) {
      c.push_back(l.is_positive() ? l.var() + 1 : -(l.var() + 1));
    }
    std::sort(c.begin(), c.end());
    out.insert(std::move(c));
  }
  return out;
}

// Observable conditioning snapshot for exact-rollback checks.
struct CondSnapshot {
  std::vector<int> unassigned;
  std::vector<bool> satisfied;
  std::vector<LBool> values;
  bool empty_clause;

  bool operator==(const CondSnapshot&) const = default;
};

inline CondSnapshot snapshot(const ConditioningState& st) {
  CondSnapshot s;
  const CnfFormula& f = st.formula();
  for (int ci = 0; ci < f.num_clauses(); ++ci) {
    s.unassigned.push_back(st.unassigned_count(ci));
    s.satisfied.push_back(st.clause_satisfied(ci));
  }
  for (Var v = 0; v < f.num_vars(); ++v) s.values.push_back(st.value(v));
  s.empty_clause = st.has_empty_clause();
  return s;
}

// All s,t-paths of the active subgraph, as sorted arc-id sequences.
inline void enum_paths_rec(const Dag& dag, const InducedDag* induced,
                           VertexId at, std::vector<ArcId>& stack,
                           std::vector<std::vector<ArcId>>& out) {
  if (at == dag.target()) {
    out.push_back(stack);
    return;
  }
  for (ArcId a : dag.out_arcs(at)) {
    if (induced != nullptr && !induced->arc_active(a)) continue;
    stack.push_back(a);
    enum_paths_rec(dag, induced, dag.arc(a).head, stack, out);
    stack.pop_back();
  }
}

inline std::vector<std::vector<ArcId>> enumerate_paths(
    const Dag& dag, const InducedDag* induced = nullptr) {
  std::vector<std::vector<ArcId>> out;
  std::vector<ArcId> stack;
  enum_paths_rec(dag, induced, dag.source(), stack, out);
  std::sort(out.begin(), out.end());
  return out;
}

// True iff the path agrees with the trail: it contains every arc whose
// variable is true and avoids every arc whose variable is false.
inline bool path_agrees(const Dag& dag, const std::vector<ArcId>& path,
                        const Trail& trail) {
  std::set<ArcId> on(path.begin(), path.end());
  for (std::size_t i = 0; i < trail.size(); ++i) {
    Lit l = trail.lit_at(i);
    ArcId a = dag.variable_arc(l.var());
    if (a == kNoArc) continue;
    if (l.is_positive() != (on.count(a) > 0)) return false;
  }
  return true;
}

inline std::string data_dir() {
  if (const char* env = std::getenv("LCSP_DATA_DIR")) return env;
  return "data";
}

}  // namespace lcsp::test

#endif  // LCSP_TESTS_TESTUTIL_HPP
