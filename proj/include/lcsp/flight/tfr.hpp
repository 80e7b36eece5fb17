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

#ifndef LCSP_FLIGHT_TFR_HPP
#define LCSP_FLIGHT_TFR_HPP

#include <cstdint>
#include <vector>

namespace lcsp::flight {

enum class TfrLiteralKind : std::uint8_t { Vertex, Segment, Departure, Arrival };

// One literal of a traffic-flow-restriction clause: a route event (visiting
// a waypoint or flying a segment within a level interval, or the identity of
// the departure/arrival airport), possibly negated.
struct TfrLiteral {
  TfrLiteralKind kind;
  std::int32_t id = -1;       // waypoint id (vertex/departure/arrival), segment tail
  std::int32_t head_id = -1;  // segment head
  int level_min = 0;          // inclusive; 0,0 = full range for dep/arr
  int level_max = 0;
  bool negated = false;
};

// Conjunction of literals.
struct TfrClause {
  std::vector<TfrLiteral> lits;
};

// A restriction in disjunctive normal form; the TFR system is their
// conjunction.
struct TfrRestriction {
  std::vector<TfrClause> clauses;
};

}  // namespace lcsp::flight

#endif  // LCSP_FLIGHT_TFR_HPP
