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

#ifndef LCSP_SOLVER_CVDS_HPP
#define LCSP_SOLVER_CVDS_HPP

#include <span>
#include <vector>

#include "lcsp/logic/cnf.hpp"
#include "lcsp/logic/trail.hpp"

namespace lcsp {

// Conflict-variables decaying sum. Scores start at the clause occurrence
// count of each variable. When propagation derives the empty clause, all
// assigned variables are bumped; when a relaxation path conflicts with the
// formula, the assignment and the conflict are bumped. Every
// `decay_interval` events all scores are multiplied by `decay`.
class CvdsScores {
 public:
  CvdsScores(const CnfFormula& formula, double bump, double decay,
             int decay_interval);

  void on_empty_clause(const Trail& trail);
  void on_path_conflict(const Trail& trail, std::span<const Var> conflict);

  double score(Var v) const { return scores_[static_cast<std::size_t>(v)]; }

 private:
  void bump_set(std::span<const Var> vars);
  void finish_event();

  std::vector<double> scores_;
  double bump_;
  double decay_;
  int decay_interval_;
  int events_ = 0;
};

}  // namespace lcsp

#endif  // LCSP_SOLVER_CVDS_HPP
