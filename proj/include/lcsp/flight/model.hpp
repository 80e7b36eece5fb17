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

#ifndef LCSP_FLIGHT_MODEL_HPP
#define LCSP_FLIGHT_MODEL_HPP

#include <vector>

#include "lcsp/errors.hpp"

namespace lcsp::flight {

// Discrete cruising altitudes, strictly increasing. Level indices are
// 1-based; `optimal` names the consumption-optimal level (the highest one in
// the bundled default table).
class LevelTable {
 public:
  LevelTable(std::vector<double> altitudes_m, int optimal_level);

  // Linear table from 1100 m (level 1) to 11300 m (level `levels`), optimal
  // at the top.
  static LevelTable standard(int levels = 181);

  int size() const { return static_cast<int>(alt_.size()); }
  int optimal() const { return optimal_; }
  double altitude_m(int level) const {
    if (level < 1 || level > size()) throw Error("flight level out of range");
    return alt_[static_cast<std::size_t>(level - 1)];
  }
  double delta_m(int a, int b) const {
    double d = altitude_m(a) - altitude_m(b);
    return d < 0 ? -d : d;
  }

 private:
  std::vector<double> alt_;
  int optimal_;
};

struct ClimbCheck {
  bool allowed;
  double toc_distance_m;  // ground distance flown while climbing
};

// Fixed-performance aircraft: constant speed, constant climb/descent rate,
// distance-proportional consumption with an exponential off-optimal-level
// penalty. Step climbs only.
struct AircraftModel {
  double speed_mps = 240.1;
  double climb_rate_mps = 12.7;
  double consumption_kg_per_km = 6.0;
  double level_penalty_base = 1.01;

  double projected_speed_mps() const;

  // Seconds to fly d kilometers level.
  double cruise_duration_s(double d_km) const;

  // Fuel burned cruising d kilometers at `level`.
  double cruise_consumption_kg(double d_km, int level,
                               const LevelTable& levels) const;

  // Whether the altitude change between the two levels fits into an arc of
  // ground length d_m, and where the top of climb lands.
  ClimbCheck climb_feasible(double d_m, int level_from, int level_to,
                            const LevelTable& levels) const;
};

struct ArcCost {
  double consumption_kg;
  double duration_s;
};

// Cost of traversing a projected segment of length d_km from `level_from` to
// `level_to`. Cruise uses the level formulas directly. A climb burns fuel at
// the mean level index until the top of climb and cruises at the target
// level for the remainder; a descent burns fuel as if cruising the whole
// segment at the source level. Throws Error when the level change does not
// fit the segment.
ArcCost arc_cost(const AircraftModel& aircraft, const LevelTable& levels,
                 double d_km, int level_from, int level_to);

}  // namespace lcsp::flight

#endif  // LCSP_FLIGHT_MODEL_HPP
