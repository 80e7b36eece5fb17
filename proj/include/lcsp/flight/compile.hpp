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

#ifndef LCSP_FLIGHT_COMPILE_HPP
#define LCSP_FLIGHT_COMPILE_HPP

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "lcsp/flight/geo.hpp"
#include "lcsp/flight/model.hpp"
#include "lcsp/flight/tfr.hpp"
#include "lcsp/solver/instance.hpp"

namespace lcsp::flight {

// Two-dimensional airway network: waypoints with coordinates and directed
// segments between them. Segment lengths are great-circle distances.
struct ProjectedNetwork {
  struct Waypoint {
    std::int32_t id;
    LatLon pos;
  };
  struct Segment {
    std::int32_t tail;
    std::int32_t head;
  };
  std::vector<Waypoint> waypoints;
  std::vector<Segment> segments;

  const Waypoint* find(std::int32_t id) const;
};

struct Vertex3d {
  std::int32_t waypoint;
  int level;
};

// Core instance compiled from network + TFRs + one origin-destination pair,
// plus the 3-D bookkeeping the front end needs for reporting.
struct CompiledInstance {
  LcspInstance core;
  std::vector<Vertex3d> vertex_info;    // per core-dag vertex
  std::vector<double> arc_duration_s;   // per core-dag arc
  std::int32_t origin_waypoint;
  std::int32_t destination_waypoint;
  int dropped_restrictions = 0;         // entirely outside the search space
};

// Deterministic neighbor expansion of one 3-D vertex: for each surviving
// out-segment, the cruise arc plus every feasible level change, ordered by
// head waypoint id then target level.
struct Expansion {
  std::int32_t head_waypoint;
  int head_level;
  ArcCost cost;
};
std::vector<Expansion> expand_neighbors(
    const ProjectedNetwork& net, const AircraftModel& aircraft,
    const LevelTable& levels,
    const std::unordered_map<std::int32_t, std::vector<std::int32_t>>& out_segments,
    const std::unordered_map<std::int32_t, double>& gcd_to_target,
    std::int32_t waypoint, int level);

// Admissible fuel lower bound for reaching `target` from `v`: consumption
// rate at the optimal level times the great-circle distance.
double heuristic_kg(const AircraftModel& aircraft, const LatLon& v,
                    const LatLon& target);

// Builds the 3-D search-space graph (waypoints filtered by the 1.2-gcd
// ellipse, segments oriented toward the destination), folds departure and
// arrival literals, aggregates vertex/segment literals over 3-D arcs, and
// Tseitin-compiles the rewritten restrictions.
CompiledInstance compile(const ProjectedNetwork& net, const LevelTable& levels,
                         const AircraftModel& aircraft,
                         const std::vector<TfrRestriction>& tfrs,
                         std::int32_t origin, std::int32_t destination);

}  // namespace lcsp::flight

#endif  // LCSP_FLIGHT_COMPILE_HPP
