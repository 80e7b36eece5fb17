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

#ifndef LCSP_FLIGHT_GEO_HPP
#define LCSP_FLIGHT_GEO_HPP

namespace lcsp::flight {

inline constexpr double kEarthRadiusKm = 6371.0;

struct LatLon {
  double lat_deg;
  double lon_deg;
};

// Haversine great-circle distance in kilometers.
double great_circle_km(const LatLon& a, const LatLon& b);

}  // namespace lcsp::flight

#endif  // LCSP_FLIGHT_GEO_HPP
