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

#ifndef LCSP_IO_FLIGHT_FILES_HPP
#define LCSP_IO_FLIGHT_FILES_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lcsp/flight/compile.hpp"

namespace lcsp::io {

// Flight dataset text formats:
//   waypoints.csv  header "id,lat,lon"
//   segments.csv   header "tail,head"
//   levels.csv     header "level,alt_m" (ascending levels from 1; the
//                  highest level is the consumption-optimal one)
//   tfrs.txt       one restriction per line; cubes separated by " | ",
//                  literals space-separated tokens:
//                    vertex:<id>[:<lmin>-<lmax>][:neg]
//                    segment:<tail>-<head>[:<lmin>-<lmax>][:neg]
//                    departure:<id>[:neg]   arrival:<id>[:neg]
//                  '#' starts a comment line.
//   od_pairs.csv   header "origin,destination"

std::vector<flight::ProjectedNetwork::Waypoint> parse_waypoints(
    std::istream& in, const std::string& filename = "");
std::vector<flight::ProjectedNetwork::Segment> parse_segments(
    std::istream& in, const std::string& filename = "");
flight::LevelTable parse_levels(std::istream& in,
                                const std::string& filename = "");
std::vector<flight::TfrRestriction> parse_tfrs(
    std::istream& in, const std::string& filename = "");
std::vector<std::pair<std::int32_t, std::int32_t>> parse_od_pairs(
    std::istream& in, const std::string& filename = "");

void write_waypoints(
    std::ostream& out,
    const std::vector<flight::ProjectedNetwork::Waypoint>& ws);
void write_segments(std::ostream& out,
                    const std::vector<flight::ProjectedNetwork::Segment>& ss);
void write_tfrs(std::ostream& out,
                const std::vector<flight::TfrRestriction>& tfrs);

flight::ProjectedNetwork load_network(const std::string& waypoints_path,
                                      const std::string& segments_path);
flight::LevelTable load_levels(const std::string& path);
std::vector<flight::TfrRestriction> load_tfrs(const std::string& path);

}  // namespace lcsp::io

#endif  // LCSP_IO_FLIGHT_FILES_HPP
