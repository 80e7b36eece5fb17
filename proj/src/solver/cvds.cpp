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

#include "lcsp/solver/cvds.hpp"

#include <algorithm>

namespace lcsp {

CvdsScores::CvdsScores(const CnfFormula& formula, double bump, double decay,
                       int decay_interval)
    : scores_(static_cast<std::size_t>(formula.num_vars())),
      bump_(bump),
      decay_(decay),
      decay_interval_(decay_interval) {
  for (Var v = 0; v < formula.num_vars(); ++v) {
    scores_[static_cast<std::size_t>(v)] =
        static_cast<double>(formula.occurrence_count(v));
  }
}

void CvdsScores::bump_set(std::span<const Var> vars) {
  for (Var v : vars) scores_[static_cast<std::size_t>(v)] += bump_;
}

void CvdsScores::finish_event() {
  if (++events_ % decay_interval_ == 0) {
    for (double& s : scores_) s *= decay_;
  }
}

void CvdsScores::on_empty_clause(const Trail& trail) {
  std::vector<Var> vars;
  vars.reserve(trail.size());
  for (std::size_t i = 0; i < trail.size(); ++i) {
    vars.push_back(trail.lit_at(i).var());
  }
  bump_set(vars);
  finish_event();
}

void CvdsScores::on_path_conflict(const Trail& trail,
                                  std::span<const Var> conflict) {
  // Union of the assignment and the conflict; each member bumped once.
  std::vector<Var> vars;
  vars.reserve(trail.size() + conflict.size());
  for (std::size_t i = 0; i < trail.size(); ++i) {
    vars.push_back(trail.lit_at(i).var());
  }
  vars.insert(vars.end(), conflict.begin(), conflict.end());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  bump_set(vars);
  finish_event();
}

}  // namespace lcsp
