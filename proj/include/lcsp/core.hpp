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

#ifndef LCSP_CORE_HPP
#define LCSP_CORE_HPP

#include <cstdint>
#include <limits>
#include <string>

namespace lcsp {

using VertexId = std::int32_t;
using ArcId = std::int32_t;
using Var = std::int32_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr ArcId kNoArc = -1;
inline constexpr Var kNoVar = -1;

// Arc weights and path costs are fixed-point integers at nano-unit
// resolution, so incumbent comparisons and duplicate-path detection are
// exact.
using Cost = std::int64_t;
inline constexpr Cost kCostScale = 1'000'000'000;
inline constexpr Cost kInfCost = std::numeric_limits<Cost>::max();

inline constexpr Cost cost_add(Cost a, Cost b) {
  if (a == kInfCost || b == kInfCost) return kInfCost;
  return a + b;
}

inline constexpr double cost_to_units(Cost c) {
  return static_cast<double>(c) / static_cast<double>(kCostScale);
}

Cost units_to_cost(double units);

// Canonical decimal rendering of a cost (integer part plus up to nine
// fractional digits, trailing zeros trimmed). Used by the text formats.
std::string cost_to_string(Cost c);
Cost cost_from_string(const std::string& text);

}  // namespace lcsp

#endif  // LCSP_CORE_HPP
