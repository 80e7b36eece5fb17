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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "lcsp/errors.hpp"
#include "lcsp/logic/conflict.hpp"
#include "lcsp/logic/propagation.hpp"
#include "lcsp/logic/tseitin.hpp"
#include "testutil.hpp"

using namespace lcsp;
using test::L;
using test::make_formula;
using test::remaining_set;
using test::snapshot;

namespace {

CnfFormula random_formula(std::mt19937_64& rng, int num_vars,
                          int num_clauses) {
  CnfFormula f;
  f.add_vars(num_vars, VarKind::Free);
  for (int c = 0; c < num_clauses; ++c) {
    int size = 1 + static_cast<int>(rng() % 3);
    std::vector<Lit> lits;
    for (int i = 0; i < size; ++i) {
      Var v = static_cast<Var>(rng() % static_cast<std::uint64_t>(num_vars));
      lits.push_back(Lit::make(v, rng() % 2 == 0));
    }
    f.add_clause(std::move(lits));
  }
  return f;
}

// Exhaustive satisfiability of a formula under a fixed partial assignment.
bool exhaustive_sat(const CnfFormula& f, const std::vector<LBool>& fixed) {
  std::vector<Var> open;
  for (Var v = 0; v < f.num_vars(); ++v) {
    if (fixed[static_cast<std::size_t>(v)] == LBool::Undef) open.push_back(v);
  }
  std::vector<LBool> values = fixed;
  for (std::uint64_t mask = 0; mask < (1ull << open.size()); ++mask) {
    for (std::size_t i = 0; i < open.size(); ++i) {
      values[static_cast<std::size_t>(open[i])] =
          (mask >> i) & 1 ? LBool::True : LBool::False;
    }
    bool ok = true;
    for (int ci = 0; ci < f.num_clauses() && ok; ++ci) {
      bool sat = false;
      for (Lit l : f.clause(ci).lits) {
        if (values[static_cast<std::size_t>(l.var())] ==
            lbool_of(l.is_positive())) {
          sat = true;
          break;
        }
      }
      ok = sat;
    }
    if (ok) return true;
  }
  return false;
}

bool dnf_conjunction_sat(int num_vars, const std::vector<DnfRestriction>& rs) {
  for (std::uint64_t mask = 0; mask < (1ull << num_vars); ++mask) {
    bool all = true;
    for (const DnfRestriction& r : rs) {
      bool any = false;
      for (const DnfCube& cube : r.cubes) {
        bool cube_true = true;
        for (Lit l : cube.lits) {
          bool v = (mask >> l.var()) & 1;
          if (v != l.is_positive()) {
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
    if (all) return true;
  }
  return false;
}

// Satisfiability of a compiled formula via enumeration of the original
// variables, each extended by the forced selector values.
bool compiled_sat(const CnfFormula& f, int num_graph_vars,
                  const VarDefinitions& defs) {
  for (std::uint64_t mask = 0; mask < (1ull << num_graph_vars); ++mask) {
    std::vector<LBool> base(static_cast<std::size_t>(f.num_vars()),
                            LBool::Undef);
    for (int v = 0; v < num_graph_vars; ++v) {
      base[static_cast<std::size_t>(v)] =
          (mask >> v) & 1 ? LBool::True : LBool::False;
    }
    CompletedAssignment asg(f, defs, std::move(base));
    bool ok = true;
    for (int ci = 0; ci < f.num_clauses() && ok; ++ci) {
      ok = asg.clause_satisfied(f.clause(ci));
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("conditioning on a literal deletes and shrinks clauses") {
  // phi = (y v z) & (y v ~z) over y=1, z=2; conditioning on z leaves (y).
  CnfFormula f = make_formula(2, {{1, 2}, {1, -2}});
  Trail trail(2);
  REQUIRE(trail.push(L(2), Reason::Decision));
  ConditioningState st(f, trail);
  CHECK(remaining_set(st) == std::set<std::vector<int>>{{1}});
  CHECK(!st.has_empty_clause());
}

TEST_CASE("conditioning on the empty assignment changes nothing") {
  CnfFormula f = make_formula(3, {{1, 2}, {-1, 3}, {2, -3}});
  Trail trail(3);
  ConditioningState st(f, trail);
  CHECK(remaining_set(st) ==
        std::set<std::vector<int>>{{1, 2}, {-1, 3}, {-3, 2}});
}

TEST_CASE("conditioning exposes the empty clause") {
  CnfFormula f = make_formula(2, {{1, 2}, {-1}});
  Trail trail(2);
  REQUIRE(trail.push(L(1), Reason::Decision));
  ConditioningState st(f, trail);
  CHECK(st.has_empty_clause());
}

TEST_CASE("conditioning is order-invariant") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 100; ++round) {
    CnfFormula f = random_formula(rng, 6, 8);
    Var a = static_cast<Var>(rng() % 6);
    Var b = static_cast<Var>(rng() % 6);
    if (a == b) continue;
    Lit la = Lit::make(a, rng() % 2 == 0);
    Lit lb = Lit::make(b, rng() % 2 == 0);
    ConditioningState s1(f);
    s1.apply(la);
    s1.apply(lb);
    ConditioningState s2(f);
    s2.apply(lb);
    s2.apply(la);
    CHECK(remaining_set(s1) == remaining_set(s2));
  }
}

TEST_CASE("rollback restores the exact pre-extension state") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    CnfFormula f = random_formula(rng, 8, 10);
    ConditioningState st(f);
    int base = static_cast<int>(rng() % 4);
    for (Var v = 0; v < base; ++v) {
      st.apply(Lit::make(v, rng() % 2 == 0));
    }
    auto before = snapshot(st);
    auto mark = st.mark();
    for (Var v = static_cast<Var>(base); v < base + 3; ++v) {
      st.apply(Lit::make(v, rng() % 2 == 0));
    }
    st.rollback(mark);
    CHECK(snapshot(st) == before);
  }
}

TEST_CASE("unit propagation: single unit clause") {
  CnfFormula f = make_formula(1, {{1}});
  Trail trail(1);
  ConditioningState st(f, trail);
  CHECK(unit_propagate(st, trail) == PropagateResult::Fixpoint);
  CHECK(trail.is_true(L(1)));
  CHECK(st.remaining_clauses().empty());
}

TEST_CASE("unit propagation: chain to fixpoint") {
  CnfFormula f = make_formula(3, {{1}, {-1, 2}, {-2, 3}});
  Trail trail(3);
  ConditioningState st(f, trail);
  int count = 0;
  CHECK(unit_propagate(st, trail, &count) == PropagateResult::Fixpoint);
  CHECK(count == 3);
  CHECK(trail.is_true(L(1)));
  CHECK(trail.is_true(L(2)));
  CHECK(trail.is_true(L(3)));
  for (std::size_t i = 0; i < trail.size(); ++i) {
    CHECK(trail.reason_at(i) == Reason::UnitPropagation);
  }
}

TEST_CASE("unit propagation: direct contradiction") {
  CnfFormula f = make_formula(1, {{1}, {-1}});
  Trail trail(1);
  ConditioningState st(f, trail);
  CHECK(unit_propagate(st, trail) == PropagateResult::EmptyClause);
}

TEST_CASE("unit propagation is sound") {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 80; ++round) {
    CnfFormula f = random_formula(rng, 7, 9);
    Trail trail(7);
    ConditioningState st(f, trail);
    for (int i = 0; i < 2; ++i) {
      Var v = static_cast<Var>(rng() % 7);
      if (trail.assigned(v)) continue;
      Lit l = Lit::make(v, rng() % 2 == 0);
      trail.push(l, Reason::Decision);
      st.apply(l);
    }
    std::vector<LBool> fixed(7, LBool::Undef);
    for (std::size_t i = 0; i < trail.size(); ++i) {
      fixed[static_cast<std::size_t>(trail.lit_at(i).var())] =
          lbool_of(trail.lit_at(i).is_positive());
    }
    Trail::Mark tm = trail.mark();
    PropagateResult r = unit_propagate(st, trail);
    if (r == PropagateResult::EmptyClause) {
      CHECK(!exhaustive_sat(f, fixed));
      continue;
    }
    std::vector<Var> open;
    for (Var v = 0; v < 7; ++v) {
      if (fixed[static_cast<std::size_t>(v)] == LBool::Undef)
        open.push_back(v);
    }
    for (std::uint64_t mask = 0; mask < (1ull << open.size()); ++mask) {
      std::vector<LBool> values = fixed;
      for (std::size_t i = 0; i < open.size(); ++i) {
        values[static_cast<std::size_t>(open[i])] =
            (mask >> i) & 1 ? LBool::True : LBool::False;
      }
      bool sat = true;
      for (int ci = 0; ci < f.num_clauses() && sat; ++ci) {
        bool cs = false;
        for (Lit l : f.clause(ci).lits) {
          if (values[static_cast<std::size_t>(l.var())] ==
              lbool_of(l.is_positive())) {
            cs = true;
            break;
          }
        }
        sat = cs;
      }
      if (!sat) continue;
      // Every satisfying completion of the seed extends the propagation.
      for (std::size_t i = tm; i < trail.size(); ++i) {
        Lit l = trail.lit_at(i);
        CHECK(values[static_cast<std::size_t>(l.var())] ==
              lbool_of(l.is_positive()));
      }
    }
  }
}

TEST_CASE("pure literal elimination assigns one-polarity free variables") {
  // z=1 appears only positively.
  CnfFormula f = make_formula(3, {{1, 2}, {1, 3}});
  Trail trail(3);
  ConditioningState st(f, trail);
  std::vector<Var> scope{0};
  CHECK(pure_literal_eliminate(st, trail, scope) == 1);
  CHECK(trail.is_true(L(1)));
  CHECK(trail.reason_at(0) == Reason::PureLiteral);
}

TEST_CASE("pure literal elimination skips mixed-polarity variables") {
  CnfFormula f = make_formula(2, {{1, 2}, {-1, 2}});
  Trail trail(2);
  ConditioningState st(f, trail);
  std::vector<Var> scope{0};
  CHECK(pure_literal_eliminate(st, trail, scope) == 0);
  CHECK(trail.empty());
}

TEST_CASE("pure literal elimination never touches graph variables") {
  CnfFormula f = make_formula(2, {{1, 2}, {1}}, /*graph_vars=*/{0});
  Trail trail(2);
  ConditioningState st(f, trail);
  std::vector<Var> scope{0};
  CHECK(pure_literal_eliminate(st, trail, scope) == 0);
  CHECK(trail.empty());
}

TEST_CASE("restriction compilation: two clauses") {
  // R = (a & b) | c over graph vars a=1,b=2,c=3.
  DnfRestriction r;
  r.cubes.push_back(DnfCube{{L(1), L(2)}});
  r.cubes.push_back(DnfCube{{L(3)}});
  auto [f, defs] = compile_dnf_restrictions(3, std::vector{r});
  REQUIRE(f.num_vars() == 5);  // selectors are vars 4 and 5 (1-based)
  auto clause = [&](std::vector<int> lits) {
    std::vector<Lit> c;
    for (int sl : lits) c.push_back(L(sl));
    std::sort(c.begin(), c.end());
    return c;
  };
  std::set<std::vector<Lit>> expected{clause({4, 5}),  clause({4, -1, -2}),
                                      clause({-4, 1}), clause({-4, 2}),
                                      clause({5, -3}), clause({-5, 3})};
  std::set<std::vector<Lit>> actual;
  for (int ci = 0; ci < f.num_clauses(); ++ci) {
    actual.insert(f.clause(ci).lits);
  }
  CHECK(actual == expected);
  REQUIRE(defs.defined(3));
  CHECK(defs.find(3)->kind == DefKind::AllOf);
  CHECK(defs.find(3)->lits == std::vector<Lit>{L(1), L(2)});
}

TEST_CASE("restriction compilation: single unit cube") {
  DnfRestriction r;
  r.cubes.push_back(DnfCube{{L(1)}});
  auto [f, defs] = compile_dnf_restrictions(1, std::vector{r});
  auto clause = [&](std::vector<int> lits) {
    std::vector<Lit> c;
    for (int sl : lits) c.push_back(L(sl));
    std::sort(c.begin(), c.end());
    return c;
  };
  std::set<std::vector<Lit>> expected{clause({2}), clause({2, -1}),
                                      clause({-2, 1})};
  std::set<std::vector<Lit>> actual;
  for (int ci = 0; ci < f.num_clauses(); ++ci) actual.insert(f.clause(ci).lits);
  CHECK(actual == expected);
}

TEST_CASE("restriction compilation: empty input") {
  auto [f, defs] = compile_dnf_restrictions(0, std::vector<DnfRestriction>{});
  CHECK(f.num_clauses() == 0);
  CHECK(f.num_vars() == 0);
  CHECK(defs.empty());
}

TEST_CASE("restriction compilation rejects empty clauses") {
  DnfRestriction r;
  r.cubes.push_back(DnfCube{});
  CHECK_THROWS_AS(compile_dnf_restrictions(1, std::vector{r}), Error);
}

TEST_CASE("compiled restrictions are equisatisfiable with the originals") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 60; ++round) {
    int num_vars = 3 + static_cast<int>(rng() % 7);
    int num_rs = 1 + static_cast<int>(rng() % 3);
    std::vector<DnfRestriction> rs;
    for (int i = 0; i < num_rs; ++i) {
      DnfRestriction r;
      int cubes = 1 + static_cast<int>(rng() % 3);
      for (int c = 0; c < cubes; ++c) {
        DnfCube cube;
        int lits = 1 + static_cast<int>(rng() % 3);
        for (int l = 0; l < lits; ++l) {
          Var v =
              static_cast<Var>(rng() % static_cast<std::uint64_t>(num_vars));
          cube.lits.push_back(Lit::make(v, rng() % 2 == 0));
        }
        r.cubes.push_back(std::move(cube));
      }
      rs.push_back(std::move(r));
    }
    auto [f, defs] = compile_dnf_restrictions(num_vars, rs);
    CHECK(dnf_conjunction_sat(num_vars, rs) == compiled_sat(f, num_vars, defs));
  }
}

TEST_CASE("standard conflict lists the variables of violated clauses") {
  // phi = (y v z) & (y v ~z); y graph (var 1), z free (var 2). The tentative
  // assignment sets y false and leaves z open: both clauses stay unsatisfied.
  CnfFormula f = make_formula(2, {{1, 2}, {1, -2}}, /*graph_vars=*/{0});
  Trail trail(2);
  ConditioningState st(f, trail);
  std::vector<LBool> base(2, LBool::Undef);
  base[0] = LBool::False;
  VarDefinitions defs;
  CompletedAssignment tent(f, defs, std::move(base));
  Conflict c =
      extract_conflict(st, trail, tent, ConflictFlavor::Standard, nullptr);
  CHECK(c.vars == std::vector<Var>{0, 1});
}

TEST_CASE("no violated clauses means no conflict to extract") {
  CnfFormula f = make_formula(2, {{1, 2}});
  Trail trail(2);
  ConditioningState st(f, trail);
  std::vector<LBool> base(2, LBool::Undef);
  base[0] = LBool::True;
  VarDefinitions defs;
  CompletedAssignment tent(f, defs, std::move(base));
  CHECK(violated_clauses(st, tent).empty());
}

TEST_CASE("graph conflict expands selector variables to their clause") {
  // Graph vars y=1, a=2, b=3; selector C1=4 defined as (a & b).
  CnfFormula f = make_formula(4, {{1, 4}}, /*graph_vars=*/{0, 1, 2});
  VarDefinitions defs;
  defs.define(3, DefKind::AllOf, {L(2), L(3)});
  Trail trail(4);
  ConditioningState st(f, trail);
  std::vector<LBool> base(4, LBool::Undef);
  base[0] = LBool::False;
  CompletedAssignment tent(f, defs, std::move(base));
  Conflict std_c =
      extract_conflict(st, trail, tent, ConflictFlavor::Standard, nullptr);
  CHECK(std_c.vars == std::vector<Var>{0, 3});
  Conflict graph_c =
      extract_conflict(st, trail, tent, ConflictFlavor::GraphOnly, &defs);
  CHECK(graph_c.vars == std::vector<Var>{0, 1, 2});
}

TEST_CASE("conflicts contain only unassigned variables and are nonempty") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int round = 0; round < 200 && checked < 60; ++round) {
    CnfFormula f = random_formula(rng, 6, 8);
    Trail trail(6);
    ConditioningState st(f, trail);
    for (int i = 0; i < 2; ++i) {
      Var v = static_cast<Var>(rng() % 6);
      if (trail.assigned(v)) continue;
      Lit l = Lit::make(v, rng() % 2 == 0);
      trail.push(l, Reason::Decision);
      st.apply(l);
    }
    if (st.has_empty_clause()) continue;
    std::vector<LBool> base(6, LBool::Undef);
    for (std::size_t i = 0; i < trail.size(); ++i) {
      base[static_cast<std::size_t>(trail.lit_at(i).var())] =
          lbool_of(trail.lit_at(i).is_positive());
    }
    for (Var v = 0; v < 6; ++v) {
      if (base[static_cast<std::size_t>(v)] == LBool::Undef && rng() % 2 == 0) {
        base[static_cast<std::size_t>(v)] =
            rng() % 2 ? LBool::True : LBool::False;
      }
    }
    VarDefinitions defs;
    CompletedAssignment tent(f, defs, std::move(base));
    if (violated_clauses(st, tent).empty()) continue;
    ++checked;
    Conflict c =
        extract_conflict(st, trail, tent, ConflictFlavor::Standard, nullptr);
    CHECK(!c.vars.empty());
    for (Var v : c.vars) CHECK(!trail.assigned(v));
  }
  CHECK(checked > 20);
}

TEST_CASE("complete-and-check forces selector values from the path") {
  // Restriction (a & b) | c over graph vars a=1,b=2,c=3.
  DnfRestriction r;
  r.cubes.push_back(DnfCube{{L(1), L(2)}});
  r.cubes.push_back(DnfCube{{L(3)}});
  auto [f, defs] = compile_dnf_restrictions(3, std::vector{r});
  Trail trail(f.num_vars());
  ConditioningState st(f, trail);

  SUBCASE("a and b hold") {
    std::vector<LBool> base(static_cast<std::size_t>(f.num_vars()),
                            LBool::Undef);
    base[0] = base[1] = LBool::True;
    base[2] = LBool::False;
    CompletedAssignment tent(f, defs, std::move(base));
    CHECK(tent.value(3) == LBool::True);   // C1
    CHECK(tent.value(4) == LBool::False);  // C2
    auto result = complete_and_check(st, tent);
    CHECK(result.satisfied);
    std::vector<LBool> values(static_cast<std::size_t>(f.num_vars()),
                              LBool::Undef);
    for (Lit l : result.witness) {
      values[static_cast<std::size_t>(l.var())] = lbool_of(l.is_positive());
    }
    for (int ci = 0; ci < f.num_clauses(); ++ci) {
      bool sat = false;
      for (Lit l : f.clause(ci).lits) {
        if (values[static_cast<std::size_t>(l.var())] ==
            lbool_of(l.is_positive()))
          sat = true;
      }
      CHECK(sat);
    }
  }

  SUBCASE("nothing holds") {
    std::vector<LBool> base(static_cast<std::size_t>(f.num_vars()),
                            LBool::Undef);
    base[0] = base[1] = base[2] = LBool::False;
    CompletedAssignment tent(f, defs, std::move(base));
    CHECK(tent.value(3) == LBool::False);
    CHECK(tent.value(4) == LBool::False);
    CHECK(!complete_and_check(st, tent).satisfied);
  }
}

TEST_CASE("complete-and-check accepts the empty formula") {
  CnfFormula f = make_formula(2, {});
  Trail trail(2);
  ConditioningState st(f, trail);
  VarDefinitions defs;
  std::vector<LBool> base(2, LBool::Undef);
  CompletedAssignment tent(f, defs, std::move(base));
  CHECK(complete_and_check(st, tent).satisfied);
}

TEST_CASE("tautological clauses are dropped at construction") {
  CnfFormula f = make_formula(2, {{1, -1, 2}, {1, 2}});
  CHECK(f.num_clauses() == 1);
  CHECK(f.dropped_tautologies() == 1);
}

TEST_CASE("literal negation is an involution") {
  for (Var v = 0; v < 5; ++v) {
    Lit l = Lit::positive(v);
    CHECK(~~l == l);
    CHECK(~l != l);
    CHECK((~l).var() == l.var());
  }
}
