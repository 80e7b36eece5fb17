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

#include "lcsp/flight/geo.hpp"

#include <cmath>

namespace lcsp::flight {

namespace {
constexpr double kPi = 3.14159265358979323846;
double deg2rad(double deg) { return deg * kPi / 180.0; }
}  // namespace

double great_circle_km(const LatLon& a, const LatLon& b) {
  double lat1 = deg2rad(a.lat_deg);
  double lat2 = deg2rad(b.lat_deg);
  double dlat = lat2 - lat1;
  double dlon = deg2rad(b.lon_deg - a.lon_deg);
  double s =
      std::sin(dlat / 2) * std::sin(dlat / 2) +
      std::cos(lat1) * std::cos(lat2) * std::sin(dlon / 2) * std::sin(dlon / 2);
  if (s > 1.0) s = 1.0;
  if (s < 0.0) s = 0.0;
  return kEarthRadiusKm * 2.0 * std::asin(std::sqrt(s));
}

}  // namespace lcsp::flight
