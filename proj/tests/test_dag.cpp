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
#include "lcsp/dag/shortest_path.hpp"
#include "lcsp/errors.hpp"
#include "lcsp/gen/generator.hpp"
#include "testutil.hpp"

using namespace lcsp;
using test::enumerate_paths;
using test::path_agrees;

namespace {

Cost u(int units) { return static_cast<Cost>(units) * kCostScale; }

// The worked example graph: s, v2..v5, t with ids s=0, v2=1, v3=2, v4=3,
// v5=4, t=5. The topological order is forced to (s, v3, v2, v5, v4, t).
Dag example_dag() {
  std::vector<Arc> arcs{
      {0, 1, u(1)},  // 0: s -> v2
      {0, 2, u(1)},  // 1: s -> v3
      {0, 4, u(1)},  // 2: s -> v5
      {1, 3, u(1)},  // 3: v2 -> v4
      {1, 4, u(1)},  // 4: v2 -> v5
      {1, 5, u(1)},  // 5: v2 -> t
      {2, 1, u(1)},  // 6: v3 -> v2
      {2, 3, u(1)},  // 7: v3 -> v4
      {4, 3, u(1)},  // 8: v5 -> v4
      {4, 5, u(1)},  // 9: v5 -> t
      {3, 5, u(1)},  // 10: v4 -> t
  };
  return Dag(6, std::move(arcs), 0, 5);
}

// Cheap two-arc route against an expensive direct arc; sigma maps every arc.
Dag pathology_dag() {
  std::vector<Arc> arcs{
      {0, 1, u(1)},  // 0: s -> v, variable o
      {0, 2, u(5)},  // 1: s -> t, variable y
      {1, 2, u(1)},  // 2: v -> t, variable x
  };
  Dag dag(3, std::move(arcs), 0, 2);
  dag.set_arc_variable(0, 0);  // o
  dag.set_arc_variable(2, 1);  // x
  dag.set_arc_variable(1, 2);  // y
  return dag;
}

}  // namespace

TEST_CASE("topological order of the worked example") {
  Dag dag = example_dag();
  // (s, v3, v2, v5, v4, t)
  CHECK(dag.topo_rank(0) == 0);
  CHECK(dag.topo_rank(2) == 1);
  CHECK(dag.topo_rank(1) == 2);
  CHECK(dag.topo_rank(4) == 3);
  CHECK(dag.topo_rank(3) == 4);
  CHECK(dag.topo_rank(5) == 5);
}

TEST_CASE("topological order of a single vertex") {
  std::vector<int> rank = topological_sort(1, {});
  CHECK(rank == std::vector<int>{0});
}

TEST_CASE("topological sort rejects cycles") {
  std::vector<Arc> arcs{{0, 1, 0}, {1, 0, 0}};
  CHECK_THROWS_AS(topological_sort(2, arcs), CycleError);
}

TEST_CASE("topological ties break toward the smallest vertex id") {
  std::vector<Arc> arcs{{0, 1, 0}, {0, 2, 0}, {1, 3, 0}, {2, 3, 0}};
  std::vector<int> rank = topological_sort(4, arcs);
  CHECK(rank == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("enforcing an arc deletes competitors and spanning arcs") {
  Dag dag = example_dag();
  dag.set_arc_variable(3, 0);  // (v2,v4)
  Trail trail(1);
  REQUIRE(trail.push(Lit::positive(0), Reason::Decision));
  auto [induced, result] = enforce_trail(dag, trail);
  REQUIRE(result.status == EnforceResult::Status::Ok);
  // Deleted: (s,v5), (v2,v5), (v2,t), (v3,v4).
  std::set<ArcId> deleted;
  for (ArcId a = 0; a < dag.num_arcs(); ++a) {
    if (!induced.arc_active(a)) deleted.insert(a);
  }
  CHECK(deleted == std::set<ArcId>{2, 4, 5, 7});
  CHECK(result.implied_forbidden.empty());  // none of the deleted are mapped
}

TEST_CASE("the empty trail deletes nothing") {
  Dag dag = example_dag();
  Trail trail(1);
  auto [induced, result] = enforce_trail(dag, trail);
  CHECK(result.status == EnforceResult::Status::Ok);
  CHECK(induced.active_arc_count() == dag.num_arcs());
}

TEST_CASE("a negative literal deletes exactly its arc") {
  Dag dag = example_dag();
  dag.set_arc_variable(3, 0);
  Trail trail(1);
  REQUIRE(trail.push(Lit::negative(0), Reason::Decision));
  auto [induced, result] = enforce_trail(dag, trail);
  CHECK(result.status == EnforceResult::Status::Ok);
  CHECK(induced.active_arc_count() == dag.num_arcs() - 1);
  CHECK(!induced.arc_active(3));
}

TEST_CASE("mutually exclusive enforcements contradict") {
  // Arcs a=(m,t) and b=(s,t); enforcing a makes b a spanning arc.
  std::vector<Arc> arcs{{0, 1, u(1)}, {0, 2, u(3)}, {1, 2, u(1)}};
  Dag dag(3, std::move(arcs), 0, 2);
  dag.set_arc_variable(2, 0);  // a = (m,t)
  dag.set_arc_variable(1, 1);  // b = (s,t)
  Trail trail(2);
  REQUIRE(trail.push(Lit::positive(0), Reason::Decision));
  REQUIRE(trail.push(Lit::positive(1), Reason::Decision));
  auto [induced, result] = enforce_trail(dag, trail);
  CHECK(result.status == EnforceResult::Status::Contradiction);
}

TEST_CASE("an enforced arc outside the source-target span is infeasible") {
  // Vertex 0 precedes the source.
  std::vector<Arc> arcs{{0, 1, u(1)}, {1, 2, u(1)}};
  Dag dag(3, std::move(arcs), 1, 2);
  dag.set_arc_variable(0, 0);
  Trail trail(1);
  REQUIRE(trail.push(Lit::positive(0), Reason::Decision));
  auto [induced, result] = enforce_trail(dag, trail);
  CHECK(result.status == EnforceResult::Status::Infeasible);
}

TEST_CASE("induced paths are exactly the paths agreeing with the trail") {
  std::mt19937_64 rng(31);
  int rounds_ok = 0;
  for (int round = 0; round < 120; ++round) {
    int vertices = 5 + static_cast<int>(rng() % 8);
    gen::RandomDag rd =
        gen::random_layered_dag(rng, vertices, vertices * 2, 1, 5);
    Dag dag(rd.num_vertices, rd.arcs, 0, rd.num_vertices - 1);
    for (ArcId a = 0; a < dag.num_arcs(); ++a) dag.set_arc_variable(a, a);
    Trail trail(dag.num_arcs());
    int assignments = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < assignments; ++i) {
      Var v =
          static_cast<Var>(rng() % static_cast<std::uint64_t>(dag.num_arcs()));
      trail.push(Lit::make(v, rng() % 4 == 0), Reason::Decision);
    }
    auto [induced, result] = enforce_trail(dag, trail);
    auto all = enumerate_paths(dag);
    std::vector<std::vector<ArcId>> agreeing;
    for (const auto& p : all) {
      if (path_agrees(dag, p, trail)) agreeing.push_back(p);
    }
    if (result.status != EnforceResult::Status::Ok) {
      CHECK(agreeing.empty());
      continue;
    }
    ++rounds_ok;
    CHECK(enumerate_paths(dag, &induced) == agreeing);
  }
  CHECK(rounds_ok > 40);
}

TEST_CASE("a larger trail only shrinks the active arc set") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 40; ++round) {
    gen::RandomDag rd = gen::random_layered_dag(rng, 10, 20, 1, 5);
    Dag dag(rd.num_vertices, rd.arcs, 0, rd.num_vertices - 1);
    for (ArcId a = 0; a < dag.num_arcs(); ++a) dag.set_arc_variable(a, a);
    Trail trail(dag.num_arcs());
    InducedDag induced(dag);
    std::vector<char> prev(static_cast<std::size_t>(dag.num_arcs()), 1);
    for (int i = 0; i < 4; ++i) {
      Var v =
          static_cast<Var>(rng() % static_cast<std::uint64_t>(dag.num_arcs()));
      if (trail.assigned(v)) continue;
      Lit l = Lit::make(v, rng() % 4 == 0);
      trail.push(l, Reason::Decision);
      std::vector<Lit> lits{l};
      if (induced.enforce(lits, trail).status != EnforceResult::Status::Ok) {
        break;
      }
      for (ArcId a = 0; a < dag.num_arcs(); ++a) {
        if (induced.arc_active(a)) CHECK(prev[static_cast<std::size_t>(a)]);
        prev[static_cast<std::size_t>(a)] = induced.arc_active(a) ? 1 : 0;
      }
    }
  }
}

TEST_CASE("shortest path on the pathology graph") {
  Dag dag = pathology_dag();
  Trail trail(3);

  SUBCASE("unconstrained optimum is the two-arc route") {
    InducedDag induced(dag);
    SpOutcome out = shortest_path(induced, {}, kInfCost);
    REQUIRE(out.status == SpOutcome::Status::PathFound);
    CHECK(out.path.arcs == std::vector<ArcId>{0, 2});
    CHECK(out.path.cost == u(2));
    CHECK(path_well_formed(dag, out.path));
  }

  SUBCASE("enforcing the direct arc reroutes") {
    REQUIRE(trail.push(Lit::positive(2), Reason::Decision));
    auto [induced, result] = enforce_trail(dag, trail);
    REQUIRE(result.status == EnforceResult::Status::Ok);
    SpOutcome out = shortest_path(induced, {}, kInfCost);
    REQUIRE(out.status == SpOutcome::Status::PathFound);
    CHECK(out.path.arcs == std::vector<ArcId>{1});
    CHECK(out.path.cost == u(5));
  }

  SUBCASE("disconnection is reported") {
    REQUIRE(trail.push(Lit::negative(1), Reason::Decision));
    REQUIRE(trail.push(Lit::negative(2), Reason::Decision));
    auto [induced, result] = enforce_trail(dag, trail);
    REQUIRE(result.status == EnforceResult::Status::Ok);
    SpOutcome out = shortest_path(induced, {}, kInfCost);
    CHECK(out.status == SpOutcome::Status::Disconnected);
  }

  SUBCASE("costs at or above the incumbent are pruned") {
    InducedDag induced(dag);
    CHECK(shortest_path(induced, {}, u(2)).status ==
          SpOutcome::Status::BoundExceeded);
    CHECK(shortest_path(induced, {}, u(3)).status ==
          SpOutcome::Status::PathFound);
  }
}

TEST_CASE("equal-cost ties resolve to the smallest arc sequence") {
  std::vector<Arc> arcs{{0, 1, u(1)}, {0, 2, u(1)}, {1, 3, u(1)}, {2, 3, u(1)}};
  Dag dag(4, std::move(arcs), 0, 3);
  InducedDag induced(dag);
  SpOutcome out = shortest_path(induced, {}, kInfCost);
  REQUIRE(out.status == SpOutcome::Status::PathFound);
  CHECK(out.path.arcs == std::vector<ArcId>{0, 2});
}

TEST_CASE("shortest path agrees with exhaustive enumeration") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 100; ++round) {
    gen::RandomDag rd = gen::random_layered_dag(rng, 10, 22, 1, 7);
    Dag dag(rd.num_vertices, rd.arcs, 0, rd.num_vertices - 1);
    InducedDag induced(dag);
    auto paths = enumerate_paths(dag);
    SpOutcome out = shortest_path(induced, {}, kInfCost);
    if (paths.empty()) {
      CHECK(out.status == SpOutcome::Status::Disconnected);
      continue;
    }
    Cost best = kInfCost;
    for (const auto& p : paths) {
      Cost c = 0;
      for (ArcId a : p) c += dag.arc(a).weight;
      best = std::min(best, c);
    }
    REQUIRE(out.status == SpOutcome::Status::PathFound);
    CHECK(out.path.cost == best);
    std::vector<ArcId> lexmin;
    for (const auto& p : paths) {
      Cost c = 0;
      for (ArcId a : p) c += dag.arc(a).weight;
      if (c != best) continue;
      if (lexmin.empty() || p < lexmin) lexmin = p;
    }
    CHECK(out.path.arcs == lexmin);
  }
}

TEST_CASE("parent path survival check") {
  Dag dag = pathology_dag();
  Trail trail(3);
  InducedDag induced(dag);
  Path two_arc{{0, 2}, u(2)};
  Path direct{{1}, u(5)};

  CHECK(path_in_graph(two_arc, induced));

  SUBCASE("forbidding a member arc kills the path") {
    REQUIRE(trail.push(Lit::negative(1), Reason::Decision));  // x = (v,t)
    std::vector<Lit> lits{Lit::negative(1)};
    REQUIRE(induced.enforce(lits, trail).status == EnforceResult::Status::Ok);
    CHECK(!path_in_graph(two_arc, induced));
  }

  SUBCASE("an enforced arc keeps its own path alive") {
    REQUIRE(trail.push(Lit::positive(2), Reason::Decision));  // y = (s,t)
    std::vector<Lit> lits{Lit::positive(2)};
    REQUIRE(induced.enforce(lits, trail).status == EnforceResult::Status::Ok);
    CHECK(path_in_graph(direct, induced));
    CHECK(!path_in_graph(two_arc, induced));
  }
}

TEST_CASE("rollback restores the active arc set exactly") {
  Dag dag = example_dag();
  dag.set_arc_variable(3, 0);
  dag.set_arc_variable(8, 1);
  Trail trail(2);
  InducedDag induced(dag);
  REQUIRE(trail.push(Lit::positive(0), Reason::Decision));
  InducedDag::Mark mark = induced.mark();
  std::vector<char> before(induced.active_mask().begin(),
                           induced.active_mask().end());
  std::vector<Lit> lits{Lit::positive(0)};
  REQUIRE(induced.enforce(lits, trail).status == EnforceResult::Status::Ok);
  induced.rollback(mark);
  std::vector<char> after(induced.active_mask().begin(),
                          induced.active_mask().end());
  CHECK(before == after);
}
