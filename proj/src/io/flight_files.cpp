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

#include "lcsp/io/flight_files.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lcsp/errors.hpp"

namespace lcsp::io {

namespace {

std::vector<std::string> split_on(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

long parse_long(const std::string& tok, const std::string& file, int line) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(file, line, "malformed integer: " + tok);
  }
}

double parse_double(const std::string& tok, const std::string& file,
                    int line) {
  try {
    std::size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(file, line, "malformed number: " + tok);
  }
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

bool skip_line(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

std::vector<flight::ProjectedNetwork::Waypoint> parse_waypoints(
    std::istream& in, const std::string& filename) {
  std::vector<flight::ProjectedNetwork::Waypoint> out;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    if (!header_seen) {
      if (line != "id,lat,lon") {
        throw ParseError(filename, line_no, "expected header id,lat,lon");
      }
      header_seen = true;
      continue;
    }
    auto f = split_on(line, ',');
    if (f.size() != 3) throw ParseError(filename, line_no, "expected id,lat,lon");
    out.push_back(flight::ProjectedNetwork::Waypoint{
        static_cast<std::int32_t>(parse_long(f[0], filename, line_no)),
        flight::LatLon{parse_double(f[1], filename, line_no),
                       parse_double(f[2], filename, line_no)}});
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (out[i].id == out[j].id) {
        throw ParseError(filename, line_no,
                         "duplicate waypoint id " + std::to_string(out[i].id));
      }
    }
  }
  return out;
}

std::vector<flight::ProjectedNetwork::Segment> parse_segments(
    std::istream& in, const std::string& filename) {
  std::vector<flight::ProjectedNetwork::Segment> out;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    if (!header_seen) {
      if (line != "tail,head") {
        throw ParseError(filename, line_no, "expected header tail,head");
      }
      header_seen = true;
      continue;
    }
    auto f = split_on(line, ',');
    if (f.size() != 2) throw ParseError(filename, line_no, "expected tail,head");
    out.push_back(flight::ProjectedNetwork::Segment{
        static_cast<std::int32_t>(parse_long(f[0], filename, line_no)),
        static_cast<std::int32_t>(parse_long(f[1], filename, line_no))});
  }
  return out;
}

flight::LevelTable parse_levels(std::istream& in,
                                const std::string& filename) {
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  std::vector<double> alt;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    if (!header_seen) {
      if (line != "level,alt_m") {
        throw ParseError(filename, line_no, "expected header level,alt_m");
      }
      header_seen = true;
      continue;
    }
    auto f = split_on(line, ',');
    if (f.size() != 2) throw ParseError(filename, line_no, "expected level,alt_m");
    long level = parse_long(f[0], filename, line_no);
    if (level != static_cast<long>(alt.size()) + 1) {
      throw ParseError(filename, line_no, "levels must ascend densely from 1");
    }
    alt.push_back(parse_double(f[1], filename, line_no));
  }
  int top = static_cast<int>(alt.size());
  try {
    return flight::LevelTable(std::move(alt), top);
  } catch (const Error& e) {
    throw ParseError(filename, line_no, e.what());
  }
}

namespace {

flight::TfrLiteral parse_tfr_literal(const std::string& tok,
                                     const std::string& file, int line) {
  auto f = split_on(tok, ':');
  flight::TfrLiteral lit;
  std::size_t next = 1;
  if (f.empty()) throw ParseError(file, line, "empty literal");
  if (f[0] == "vertex") {
    lit.kind = flight::TfrLiteralKind::Vertex;
    if (f.size() < 2) throw ParseError(file, line, "vertex literal needs an id");
    lit.id = static_cast<std::int32_t>(parse_long(f[1], file, line));
    next = 2;
  } else if (f[0] == "segment") {
    lit.kind = flight::TfrLiteralKind::Segment;
    if (f.size() < 2) throw ParseError(file, line, "segment literal needs ids");
    auto ends = split_on(f[1], '-');
    if (ends.size() != 2) throw ParseError(file, line, "segment ids are tail-head");
    lit.id = static_cast<std::int32_t>(parse_long(ends[0], file, line));
    lit.head_id = static_cast<std::int32_t>(parse_long(ends[1], file, line));
    next = 2;
  } else if (f[0] == "departure" || f[0] == "arrival") {
    lit.kind = f[0] == "departure" ? flight::TfrLiteralKind::Departure
                                   : flight::TfrLiteralKind::Arrival;
    if (f.size() < 2) throw ParseError(file, line, f[0] + " literal needs an id");
    lit.id = static_cast<std::int32_t>(parse_long(f[1], file, line));
    next = 2;
  } else {
    throw ParseError(file, line, "unknown literal kind: " + f[0]);
  }
  for (; next < f.size(); ++next) {
    if (f[next] == "neg") {
      lit.negated = true;
    } else if (lit.kind == flight::TfrLiteralKind::Vertex ||
               lit.kind == flight::TfrLiteralKind::Segment) {
      auto range = split_on(f[next], '-');
      if (range.size() != 2) {
        throw ParseError(file, line, "level interval is lmin-lmax");
      }
      lit.level_min = static_cast<int>(parse_long(range[0], file, line));
      lit.level_max = static_cast<int>(parse_long(range[1], file, line));
      if (lit.level_min > lit.level_max || lit.level_min < 1) {
        throw ParseError(file, line, "invalid level interval");
      }
    } else {
      throw ParseError(file, line, "unexpected literal suffix: " + f[next]);
    }
  }
  return lit;
}

}  // namespace

std::vector<flight::TfrRestriction> parse_tfrs(std::istream& in,
                                               const std::string& filename) {
  std::vector<flight::TfrRestriction> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    flight::TfrRestriction r;
    for (const std::string& cube_text : [&] {
           std::vector<std::string> cubes;
           std::string cur;
           std::istringstream ss(line);
           std::string tok;
           std::vector<std::string> toks;
           while (ss >> tok) toks.push_back(tok);
           std::vector<std::string> result;
           std::string acc;
           for (const std::string& t : toks) {
             if (t == "|") {
               result.push_back(acc);
               acc.clear();
             } else {
               acc += acc.empty() ? t : " " + t;
             }
           }
           result.push_back(acc);
           return result;
         }()) {
      flight::TfrClause clause;
      std::istringstream ss(cube_text);
      std::string tok;
      while (ss >> tok) {
        clause.lits.push_back(parse_tfr_literal(tok, filename, line_no));
      }
      if (clause.lits.empty()) {
        throw ParseError(filename, line_no, "empty clause in restriction");
      }
      r.clauses.push_back(std::move(clause));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::pair<std::int32_t, std::int32_t>> parse_od_pairs(
    std::istream& in, const std::string& filename) {
  std::vector<std::pair<std::int32_t, std::int32_t>> out;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    if (!header_seen) {
      if (line != "origin,destination") {
        throw ParseError(filename, line_no, "expected header origin,destination");
      }
      header_seen = true;
      continue;
    }
    auto f = split_on(line, ',');
    if (f.size() != 2) {
      throw ParseError(filename, line_no, "expected origin,destination");
    }
    out.emplace_back(
        static_cast<std::int32_t>(parse_long(f[0], filename, line_no)),
        static_cast<std::int32_t>(parse_long(f[1], filename, line_no)));
  }
  return out;
}

void write_waypoints(
    std::ostream& out,
    const std::vector<flight::ProjectedNetwork::Waypoint>& ws) {
  out << "id,lat,lon\n";
  for (const auto& w : ws) {
    out << w.id << "," << fmt_double(w.pos.lat_deg) << ","
        << fmt_double(w.pos.lon_deg) << "\n";
  }
}

void write_segments(std::ostream& out,
                    const std::vector<flight::ProjectedNetwork::Segment>& ss) {
  out << "tail,head\n";
  for (const auto& s : ss) out << s.tail << "," << s.head << "\n";
}

void write_tfrs(std::ostream& out,
                const std::vector<flight::TfrRestriction>& tfrs) {
  for (const auto& r : tfrs) {
    bool first_cube = true;
    for (const auto& c : r.clauses) {
      if (!first_cube) out << " | ";
      first_cube = false;
      bool first_lit = true;
      for (const auto& l : c.lits) {
        if (!first_lit) out << " ";
        first_lit = false;
        switch (l.kind) {
          case flight::TfrLiteralKind::Vertex:
            out << "vertex:" << l.id;
            break;
          case flight::TfrLiteralKind::Segment:
            out << "segment:" << l.id << "-" << l.head_id;
            break;
          case flight::TfrLiteralKind::Departure:
            out << "departure:" << l.id;
            break;
          case flight::TfrLiteralKind::Arrival:
            out << "arrival:" << l.id;
            break;
        }
        if ((l.kind == flight::TfrLiteralKind::Vertex ||
             l.kind == flight::TfrLiteralKind::Segment) &&
            l.level_min > 0) {
          out << ":" << l.level_min << "-" << l.level_max;
        }
        if (l.negated) out << ":neg";
      }
    }
    out << "\n";
  }
}

flight::ProjectedNetwork load_network(const std::string& waypoints_path,
                                      const std::string& segments_path) {
  std::ifstream w(waypoints_path);
  if (!w) throw Error("cannot open " + waypoints_path);
  std::ifstream s(segments_path);
  if (!s) throw Error("cannot open " + segments_path);
  flight::ProjectedNetwork net;
  net.waypoints = parse_waypoints(w, waypoints_path);
  net.segments = parse_segments(s, segments_path);
  for (const auto& seg : net.segments) {
    if (net.find(seg.tail) == nullptr || net.find(seg.head) == nullptr) {
      throw Error("segment references unknown waypoint");
    }
  }
  return net;
}

flight::LevelTable load_levels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_levels(in, path);
}

std::vector<flight::TfrRestriction> load_tfrs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_tfrs(in, path);
}

}  // namespace lcsp::io
