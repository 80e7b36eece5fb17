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

#ifndef LCSP_GEN_GENERATOR_HPP
#define LCSP_GEN_GENERATOR_HPP

#include <cstdint>
#include <random>

#include "lcsp/solver/instance.hpp"

namespace lcsp::gen {

// Seed-stable integer helpers over mt19937_64.
inline std::uint64_t next_u64(std::mt19937_64& rng) { return rng(); }
inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(next_u64(rng) %
                               static_cast<std::uint64_t>(hi - lo + 1));
}
inline bool chance(std::mt19937_64& rng, double p) {
  return static_cast<double>(next_u64(rng) >> 11) * (1.0 / 9007199254740992.0) <
         p;
}

struct GenParams {
  int vertices = 25;
  int arcs = 60;
  int restrictions = 10;
  int max_cube_literals = 3;   // literals per DNF clause
  int max_cubes = 3;           // DNF clauses per restriction
  double free_var_rate = 0.0;  // probability a literal uses a noise free var
  int free_var_pool = 4;
  int weight_min = 1;          // integral weight units
  int weight_max = 10;
  double negative_rate = 0.4;  // probability a DNF literal is negated
  // Total free variables (selectors plus noise) stay at or below this, so
  // the brute-force reference remains inside its enumeration guard.
  int free_var_budget = 20;
};

// Deterministic layered random DAG, guaranteed s,t-connected. Vertex 0 is
// the source, vertex `vertices`-1 the target.
struct RandomDag {
  int num_vertices;
  std::vector<Arc> arcs;
};
RandomDag random_layered_dag(std::mt19937_64& rng, int vertices, int arcs,
                             int weight_min, int weight_max);

// Full random instance: layered DAG, every arc mapped to a graph variable,
// random DNF restrictions over arc variables (with optional noise free
// variables), compiled to CNF. The original restrictions stay attached.
LcspInstance generate_instance(std::uint64_t seed, const GenParams& params);

}  // namespace lcsp::gen

#endif  // LCSP_GEN_GENERATOR_HPP
