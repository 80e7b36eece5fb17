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

#include "lcsp/gen/generator.hpp"

#include <algorithm>
#include <set>

#include "lcsp/errors.hpp"
#include "lcsp/logic/tseitin.hpp"

namespace lcsp::gen {

RandomDag random_layered_dag(std::mt19937_64& rng, int vertices, int arcs,
                             int weight_min, int weight_max) {
  if (vertices < 2) throw Error("need at least two vertices");
  int layers = std::max(3, std::min(vertices, vertices / 4 + 2));
  std::vector<int> layer_of(static_cast<std::size_t>(vertices));
  layer_of[0] = 0;
  layer_of[static_cast<std::size_t>(vertices - 1)] = layers - 1;
  for (int v = 1; v + 1 < vertices; ++v) {
    layer_of[static_cast<std::size_t>(v)] = uniform_int(rng, 1, layers - 2);
  }

  auto weight = [&] {
    return static_cast<Cost>(uniform_int(rng, weight_min, weight_max)) *
           kCostScale;
  };

  std::set<std::pair<VertexId, VertexId>> used;
  std::vector<Arc> raw;
  auto add_arc = [&](VertexId u, VertexId v) {
    if (u == v) return false;
    if (layer_of[static_cast<std::size_t>(u)] >=
        layer_of[static_cast<std::size_t>(v)]) {
      return false;
    }
    if (!used.emplace(u, v).second) return false;
    raw.push_back(Arc{u, v, weight()});
    return true;
  };

  // Backbone path from source to target through every layer in between.
  std::vector<std::vector<VertexId>> by_layer(
      static_cast<std::size_t>(layers));
  for (int v = 0; v < vertices; ++v) {
    by_layer[static_cast<std::size_t>(layer_of[static_cast<std::size_t>(v)])]
        .push_back(v);
  }
  VertexId prev = 0;
  for (int l = 1; l < layers; ++l) {
    const auto& pool = by_layer[static_cast<std::size_t>(l)];
    if (pool.empty()) continue;
    VertexId pick =
        pool[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(pool.size()) - 1))];
    add_arc(prev, pick);
    prev = pick;
  }
  if (prev != vertices - 1) add_arc(prev, vertices - 1);

  int attempts = 0;
  while (static_cast<int>(raw.size()) < arcs && attempts < arcs * 50) {
    ++attempts;
    VertexId u = uniform_int(rng, 0, vertices - 1);
    VertexId v = uniform_int(rng, 0, vertices - 1);
    add_arc(u, v);
  }

  // Canonical arc order: by (tail, head).
  std::sort(raw.begin(), raw.end(), [](const Arc& a, const Arc& b) {
    return std::make_pair(a.tail, a.head) < std::make_pair(b.tail, b.head);
  });
  return RandomDag{vertices, std::move(raw)};
}

LcspInstance generate_instance(std::uint64_t seed, const GenParams& params) {
  std::mt19937_64 rng(seed);
  RandomDag rd = random_layered_dag(rng, params.vertices, params.arcs,
                                    params.weight_min, params.weight_max);
  int num_arcs = static_cast<int>(rd.arcs.size());

  // One graph variable per arc.
  Dag dag(rd.num_vertices, rd.arcs, 0, rd.num_vertices - 1);

  // Free-variable budget: selectors (one per cube) plus the noise pool.
  int pool_size = params.free_var_rate > 0
                      ? std::min(params.free_var_pool,
                                 std::max(0, params.free_var_budget / 4))
                      : 0;
  int selector_budget = params.free_var_budget - pool_size;

  std::vector<DnfRestriction> restrictions;
  int selectors_used = 0;
  for (int r = 0; r < params.restrictions; ++r) {
    int cubes = uniform_int(rng, 1, params.max_cubes);
    if (selectors_used + cubes > selector_budget) {
      cubes = selector_budget - selectors_used;
      if (cubes <= 0) break;
    }
    selectors_used += cubes;
    DnfRestriction restriction;
    for (int c = 0; c < cubes; ++c) {
      int lits = uniform_int(rng, 1, params.max_cube_literals);
      std::set<int> seen;  // literal codes relative to this cube
      DnfCube cube;
      for (int i = 0; i < lits; ++i) {
        bool noise = pool_size > 0 && chance(rng, params.free_var_rate);
        Var v;
        if (noise) {
          v = static_cast<Var>(num_arcs + uniform_int(rng, 0, pool_size - 1));
        } else {
          v = static_cast<Var>(uniform_int(rng, 0, num_arcs - 1));
        }
        bool neg = chance(rng, params.negative_rate);
        Lit l = Lit::make(v, !neg);
        if (!seen.insert(l.index()).second) continue;
        cube.lits.push_back(l);
      }
      if (!cube.lits.empty()) restriction.cubes.push_back(std::move(cube));
    }
    if (!restriction.cubes.empty()) {
      restrictions.push_back(std::move(restriction));
    }
  }

  CnfFormula formula;
  formula.add_vars(num_arcs, VarKind::Graph);
  formula.add_vars(pool_size, VarKind::Free);
  VarDefinitions defs;
  compile_dnf_restrictions(restrictions, formula, defs);
  for (ArcId a = 0; a < num_arcs; ++a) {
    dag.set_arc_variable(a, static_cast<Var>(a));
  }

  return LcspInstance{std::move(dag), std::move(formula), std::move(defs),
                      std::move(restrictions), {}};
}

}  // namespace lcsp::gen
