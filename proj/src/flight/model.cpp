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

#include "lcsp/flight/model.hpp"

#include <cmath>

namespace lcsp::flight {

LevelTable::LevelTable(std::vector<double> altitudes_m, int optimal_level)
    : alt_(std::move(altitudes_m)), optimal_(optimal_level) {
  if (alt_.empty()) throw Error("level table must not be empty");
  for (std::size_t i = 1; i < alt_.size(); ++i) {
    if (alt_[i] <= alt_[i - 1]) {
      throw Error("level altitudes must be strictly increasing");
    }
  }
  if (optimal_ < 1 || optimal_ > size()) {
    throw Error("optimal level out of range");
  }
}

LevelTable LevelTable::standard(int levels) {
  std::vector<double> alt(static_cast<std::size_t>(levels));
  const double lo = 1100.0, hi = 11300.0;
  for (int l = 1; l <= levels; ++l) {
    alt[static_cast<std::size_t>(l - 1)] =
        levels == 1 ? hi : lo + (hi - lo) * (l - 1) / (levels - 1);
  }
  return LevelTable(std::move(alt), levels);
}

double AircraftModel::projected_speed_mps() const {
  return std::sqrt(speed_mps * speed_mps - climb_rate_mps * climb_rate_mps);
}

double AircraftModel::cruise_duration_s(double d_km) const {
  return 1e3 * d_km / speed_mps;
}

double AircraftModel::cruise_consumption_kg(double d_km, int level,
                                            const LevelTable& levels) const {
  double exponent = std::abs(static_cast<double>(levels.optimal() - level));
  return d_km * consumption_kg_per_km * std::pow(level_penalty_base, exponent);
}

ClimbCheck AircraftModel::climb_feasible(double d_m, int level_from,
                                         int level_to,
                                         const LevelTable& levels) const {
  double climb_s = levels.delta_m(level_from, level_to) / climb_rate_mps;
  double toc = projected_speed_mps() * climb_s;
  return ClimbCheck{toc <= d_m, toc};
}

ArcCost arc_cost(const AircraftModel& aircraft, const LevelTable& levels,
                 double d_km, int level_from, int level_to) {
  if (level_from == level_to) {
    return ArcCost{aircraft.cruise_consumption_kg(d_km, level_from, levels),
                   aircraft.cruise_duration_s(d_km)};
  }
  double d_m = d_km * 1e3;
  ClimbCheck check = aircraft.climb_feasible(d_m, level_from, level_to, levels);
  if (!check.allowed) throw Error("level change does not fit the segment");
  double climb_s = levels.delta_m(level_from, level_to) / aircraft.climb_rate_mps;
  double remainder_km = (d_m - check.toc_distance_m) / 1e3;
  double duration = climb_s + aircraft.cruise_duration_s(remainder_km);
  if (level_to < level_from) {
    // Descent burns as if cruising the whole segment at the source level.
    return ArcCost{aircraft.cruise_consumption_kg(d_km, level_from, levels),
                   duration};
  }
  // Climb burns at the mean level index until the top of climb, then cruises
  // at the target level.
  double mean_level = (level_from + level_to) / 2.0;
  double exponent = std::abs(static_cast<double>(levels.optimal()) - mean_level);
  double climb_kg = (check.toc_distance_m / 1e3) *
                    aircraft.consumption_kg_per_km *
                    std::pow(aircraft.level_penalty_base, exponent);
  double cruise_kg =
      aircraft.cruise_consumption_kg(remainder_km, level_to, levels);
  return ArcCost{climb_kg + cruise_kg, duration};
}

}  // namespace lcsp::flight
