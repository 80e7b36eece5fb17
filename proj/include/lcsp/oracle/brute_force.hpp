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

#ifndef LCSP_ORACLE_BRUTE_FORCE_HPP
#define LCSP_ORACLE_BRUTE_FORCE_HPP

#include "lcsp/solver/instance.hpp"
#include "lcsp/solver/stats.hpp"

namespace lcsp::oracle {

struct OracleGuards {
  std::int64_t max_paths = 1'000'000;
  int max_free_vars = 20;
};

// Reference solver: enumerates all source-target paths in increasing cost
// and returns the first whose induced assignment extends to a satisfying
// one. Feasibility per path is decided on the instance's original DNF
// restrictions when they are attached (with exhaustive enumeration of noise
// free variables), otherwise by exhaustive enumeration of all free variables
// of the CNF. Throws TooLargeError when a guard is exceeded. Independent of
// the conditioning/enforcement machinery under test.
Solution brute_force_solve(const LcspInstance& inst,
                           const OracleGuards& guards = {});

}  // namespace lcsp::oracle

#endif  // LCSP_ORACLE_BRUTE_FORCE_HPP
