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

#include "lcsp/flight/compile.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <map>

namespace lcsp::flight {

const ProjectedNetwork::Waypoint* ProjectedNetwork::find(
    std::int32_t id) const {
  for (const Waypoint& w : waypoints) {
    if (w.id == id) return &w;
  }
  return nullptr;
}

std::vector<Expansion> expand_neighbors(
    const ProjectedNetwork& net, const AircraftModel& aircraft,
    const LevelTable& levels,
    const std::unordered_map<std::int32_t, std::vector<std::int32_t>>&
        out_segments,
    const std::unordered_map<std::int32_t, double>& gcd_to_target,
    std::int32_t waypoint, int level) {
  (void)gcd_to_target;
  std::vector<Expansion> out;
  auto it = out_segments.find(waypoint);
  if (it == out_segments.end()) return out;
  const ProjectedNetwork::Waypoint* tail = net.find(waypoint);
  for (std::int32_t head : it->second) {
    const ProjectedNetwork::Waypoint* hw = net.find(head);
    double d_km = great_circle_km(tail->pos, hw->pos);
    for (int l2 = 1; l2 <= levels.size(); ++l2) {
      if (l2 != level &&
          !aircraft.climb_feasible(d_km * 1e3, level, l2, levels).allowed) {
        continue;
      }
      out.push_back(
          Expansion{head, l2, arc_cost(aircraft, levels, d_km, level, l2)});
    }
  }
  return out;
}

double heuristic_kg(const AircraftModel& aircraft, const LatLon& v,
                    const LatLon& target) {
  return aircraft.consumption_kg_per_km * great_circle_km(v, target);
}

namespace {

struct AggregateKey {
  int kind;  // 0 vertex, 1 segment
  std::int32_t id;
  std::int32_t head;
  int lmin, lmax;

  bool operator<(const AggregateKey& o) const {
    return std::tie(kind, id, head, lmin, lmax) <
           std::tie(o.kind, o.id, o.head, o.lmin, o.lmax);
  }
};

// Cube literal after departure/arrival folding: either a constant or an
// aggregate reference.
struct FoldedLit {
  bool is_constant;
  bool constant_value;
  AggregateKey key{};
  bool negated = false;
};

}  // namespace

CompiledInstance compile(const ProjectedNetwork& net, const LevelTable& levels,
                         const AircraftModel& aircraft,
                         const std::vector<TfrRestriction>& tfrs,
                         std::int32_t origin, std::int32_t destination) {
  const ProjectedNetwork::Waypoint* s_wp = net.find(origin);
  const ProjectedNetwork::Waypoint* t_wp = net.find(destination);
  if (s_wp == nullptr) {
    throw UnknownAirportError("unknown origin waypoint " +
                              std::to_string(origin));
  }
  if (t_wp == nullptr) {
    throw UnknownAirportError("unknown destination waypoint " +
                              std::to_string(destination));
  }

  // Search space: waypoints inside the 1.2-gcd ellipse.
  double gcd_st = great_circle_km(s_wp->pos, t_wp->pos);
  std::unordered_map<std::int32_t, const ProjectedNetwork::Waypoint*> kept;
  std::unordered_map<std::int32_t, double> gcd_to_target;
  for (const auto& w : net.waypoints) {
    double via = great_circle_km(s_wp->pos, w.pos) +
                 great_circle_km(w.pos, t_wp->pos);
    if (via <= 1.2 * gcd_st + 1e-9) {
      kept.emplace(w.id, &w);
      gcd_to_target.emplace(w.id, great_circle_km(w.pos, t_wp->pos));
    }
  }

  // Orient segments toward the destination: keep (u,v) iff
  // (gcd(v,t), id(v)) < (gcd(u,t), id(u)). Guarantees acyclicity.
  auto orient_key = [&](std::int32_t w) {
    return std::make_pair(gcd_to_target.at(w), w);
  };
  std::unordered_map<std::int32_t, std::vector<std::int32_t>> out_segments;
  for (const auto& seg : net.segments) {
    if (!kept.count(seg.tail) || !kept.count(seg.head)) continue;
    if (orient_key(seg.head) < orient_key(seg.tail)) {
      out_segments[seg.tail].push_back(seg.head);
    }
  }
  for (auto& [w, heads] : out_segments) {
    std::sort(heads.begin(), heads.end());
    heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
  }

  // Materialize the 3-D graph reachable from the origin at the lowest level.
  struct V3dLess {
    bool operator()(const Vertex3d& a, const Vertex3d& b) const {
      return std::tie(a.waypoint, a.level) < std::tie(b.waypoint, b.level);
    }
  };
  std::map<Vertex3d, int, V3dLess> discovered;  // -> provisional mark
  std::deque<Vertex3d> frontier;
  Vertex3d s3d{origin, 1};
  Vertex3d t3d{destination, 1};
  discovered.emplace(s3d, 0);
  frontier.push_back(s3d);
  struct RawArc {
    Vertex3d tail, head;
    ArcCost cost;
  };
  std::vector<RawArc> raw_arcs;
  while (!frontier.empty()) {
    Vertex3d v = frontier.front();
    frontier.pop_front();
    for (const Expansion& e : expand_neighbors(net, aircraft, levels,
                                               out_segments, gcd_to_target,
                                               v.waypoint, v.level)) {
      Vertex3d head{e.head_waypoint, e.head_level};
      raw_arcs.push_back(RawArc{v, head, e.cost});
      if (discovered.emplace(head, 0).second) frontier.push_back(head);
    }
  }
  if (!discovered.count(t3d)) {
    throw EmptySearchSpaceError("destination unreachable in the search space");
  }

  // Keep only vertices that can still reach the destination.
  std::map<Vertex3d, std::vector<std::size_t>, V3dLess> in_of;
  for (std::size_t i = 0; i < raw_arcs.size(); ++i) {
    in_of[raw_arcs[i].head].push_back(i);
  }
  std::map<Vertex3d, char, V3dLess> coreach;
  std::deque<Vertex3d> back;
  coreach[t3d] = 1;
  back.push_back(t3d);
  while (!back.empty()) {
    Vertex3d v = back.front();
    back.pop_front();
    auto it = in_of.find(v);
    if (it == in_of.end()) continue;
    for (std::size_t i : it->second) {
      Vertex3d u = raw_arcs[i].tail;
      if (!coreach.count(u)) {
        coreach[u] = 1;
        back.push_back(u);
      }
    }
  }

  // Dense ids: vertices ordered by (waypoint, level); arcs by (tail, head).
  std::map<Vertex3d, VertexId, V3dLess> vid;
  std::vector<Vertex3d> vertex_info;
  for (const auto& [v, mark] : discovered) {
    (void)mark;
    if (!coreach.count(v)) continue;
    vid.emplace(v, static_cast<VertexId>(vertex_info.size()));
    vertex_info.push_back(v);
  }
  std::vector<std::size_t> arc_order;
  for (std::size_t i = 0; i < raw_arcs.size(); ++i) {
    if (vid.count(raw_arcs[i].tail) && vid.count(raw_arcs[i].head)) {
      arc_order.push_back(i);
    }
  }
  std::sort(arc_order.begin(), arc_order.end(),
            [&](std::size_t a, std::size_t b) {
              return std::make_pair(vid.at(raw_arcs[a].tail),
                                    vid.at(raw_arcs[a].head)) <
                     std::make_pair(vid.at(raw_arcs[b].tail),
                                    vid.at(raw_arcs[b].head));
            });
  std::vector<Arc> arcs;
  std::vector<double> durations;
  arcs.reserve(arc_order.size());
  for (std::size_t i : arc_order) {
    const RawArc& ra = raw_arcs[i];
    arcs.push_back(Arc{vid.at(ra.tail), vid.at(ra.head),
                       units_to_cost(ra.cost.consumption_kg)});
    durations.push_back(ra.cost.duration_s);
  }

  // 3-D arc sets of vertex and segment literals.
  auto arcs_of_key = [&](const AggregateKey& key) {
    std::vector<ArcId> out;
    for (ArcId a = 0; a < static_cast<ArcId>(arcs.size()); ++a) {
      const Vertex3d& tl =
          vertex_info[static_cast<std::size_t>(arcs[static_cast<std::size_t>(a)].tail)];
      const Vertex3d& hd =
          vertex_info[static_cast<std::size_t>(arcs[static_cast<std::size_t>(a)].head)];
      if (key.kind == 0) {
        if (key.id == origin) {
          // Every visit of the origin waypoint uses one of its out-arcs.
          if (tl.waypoint == key.id && tl.level >= key.lmin &&
              tl.level <= key.lmax) {
            out.push_back(a);
          }
        } else if (hd.waypoint == key.id && hd.level >= key.lmin &&
                   hd.level <= key.lmax) {
          out.push_back(a);
        }
      } else {
        if (tl.waypoint == key.id && hd.waypoint == key.head &&
            tl.level >= key.lmin && tl.level <= key.lmax &&
            hd.level >= key.lmin && hd.level <= key.lmax) {
          out.push_back(a);
        }
      }
    }
    return out;
  };

  // Fold departure/arrival literals and drop restrictions entirely outside
  // the search space; rewrite the rest over aggregate keys.
  int full_range_max = levels.size();
  auto clamp_interval = [&](const TfrLiteral& l, int* lo, int* hi) {
    *lo = l.level_min <= 0 ? 1 : l.level_min;
    *hi = l.level_max <= 0 ? full_range_max : std::min(l.level_max, full_range_max);
  };
  auto element_outside = [&](const TfrLiteral& l) {
    switch (l.kind) {
      case TfrLiteralKind::Vertex:
        return kept.count(l.id) == 0;
      case TfrLiteralKind::Segment:
        return kept.count(l.id) == 0 || kept.count(l.head_id) == 0;
      default:
        return false;
    }
  };

  int dropped = 0;
  std::vector<std::vector<std::vector<FoldedLit>>> folded_restrictions;
  for (const TfrRestriction& r : tfrs) {
    bool has_space_literal = false;
    bool all_space_literals_outside = true;
    for (const TfrClause& c : r.clauses) {
      for (const TfrLiteral& l : c.lits) {
        if (l.kind == TfrLiteralKind::Vertex ||
            l.kind == TfrLiteralKind::Segment) {
          has_space_literal = true;
          if (!element_outside(l)) all_space_literals_outside = false;
        }
      }
    }
    if (has_space_literal && all_space_literals_outside) {
      ++dropped;
      continue;
    }
    std::vector<std::vector<FoldedLit>> cubes;
    bool restriction_true = false;
    for (const TfrClause& c : r.clauses) {
      std::vector<FoldedLit> cube;
      bool dead = false;
      for (const TfrLiteral& l : c.lits) {
        FoldedLit fl;
        if (l.kind == TfrLiteralKind::Departure ||
            l.kind == TfrLiteralKind::Arrival) {
          bool value = l.kind == TfrLiteralKind::Departure
                           ? l.id == origin
                           : l.id == destination;
          if (l.negated) value = !value;
          fl.is_constant = true;
          fl.constant_value = value;
        } else if (element_outside(l)) {
          fl.is_constant = true;
          fl.constant_value = l.negated;  // inner constant false
        } else {
          int lo, hi;
          clamp_interval(l, &lo, &hi);
          fl.is_constant = false;
          fl.key = AggregateKey{
              l.kind == TfrLiteralKind::Vertex ? 0 : 1, l.id, l.head_id, lo,
              hi};
          fl.negated = l.negated;
        }
        if (fl.is_constant) {
          if (!fl.constant_value) {
            dead = true;
            break;
          }
          continue;  // constant true literal drops out of the cube
        }
        cube.push_back(fl);
      }
      if (dead) continue;
      if (cube.empty()) {
        restriction_true = true;
        break;
      }
      cubes.push_back(std::move(cube));
    }
    if (restriction_true) continue;
    folded_restrictions.push_back(std::move(cubes));
  }

  // Aggregate arc sets, first-use order; empty sets fold to constant false.
  std::map<AggregateKey, std::vector<ArcId>> agg_arcs;
  std::vector<AggregateKey> agg_order;
  for (const auto& cubes : folded_restrictions) {
    for (const auto& cube : cubes) {
      for (const FoldedLit& fl : cube) {
        if (agg_arcs.count(fl.key)) continue;
        agg_arcs.emplace(fl.key, arcs_of_key(fl.key));
        agg_order.push_back(fl.key);
      }
    }
  }

  // Graph variables only for arcs referenced by some aggregate.
  std::vector<ArcId> referenced;
  for (const auto& [key, set] : agg_arcs) {
    referenced.insert(referenced.end(), set.begin(), set.end());
  }
  std::sort(referenced.begin(), referenced.end());
  referenced.erase(std::unique(referenced.begin(), referenced.end()),
                   referenced.end());

  Dag dag(static_cast<int>(vertex_info.size()), arcs, vid.at(s3d),
          vid.at(t3d));
  CnfFormula formula;
  VarDefinitions defs;
  for (ArcId a : referenced) {
    Var v = formula.add_var(VarKind::Graph);
    dag.set_arc_variable(a, v);
  }

  // Aggregate variables A <-> (a_1 v ... v a_k).
  std::map<AggregateKey, Var> agg_var;
  for (const AggregateKey& key : agg_order) {
    const std::vector<ArcId>& set = agg_arcs.at(key);
    if (set.empty()) continue;  // folded below
    Var av = formula.add_var(VarKind::Free);
    agg_var.emplace(key, av);
    std::vector<Lit> any;
    any.push_back(Lit::negative(av));
    std::vector<Lit> members;
    for (ArcId a : set) {
      Lit m = Lit::positive(dag.arc_variable(a));
      any.push_back(m);
      members.push_back(m);
      formula.add_clause({Lit::positive(av), ~m});
    }
    formula.add_clause(std::move(any));
    defs.define(av, DefKind::AnyOf, std::move(members));
  }

  // Rewrite cubes over aggregate variables and Tseitin-compile.
  std::vector<DnfRestriction> rewritten;
  for (const auto& cubes : folded_restrictions) {
    DnfRestriction r;
    bool restriction_true = false;
    for (const auto& cube : cubes) {
      DnfCube out_cube;
      bool dead = false;
      for (const FoldedLit& fl : cube) {
        auto it = agg_var.find(fl.key);
        if (it == agg_var.end()) {
          // Empty aggregate: inner constant false.
          if (!fl.negated) {
            dead = true;
            break;
          }
          continue;
        }
        out_cube.lits.push_back(Lit::make(it->second, !fl.negated));
      }
      if (dead) continue;
      if (out_cube.lits.empty()) {
        restriction_true = true;
        break;
      }
      r.cubes.push_back(std::move(out_cube));
    }
    if (restriction_true) continue;
    rewritten.push_back(std::move(r));
  }
  compile_dnf_restrictions(rewritten, formula, defs);

  // Integer heuristic, shaved multiplicatively so rounding the three terms
  // of a triangle independently cannot break consistency at the nano grid.
  std::vector<Cost> heuristic(vertex_info.size(), 0);
  for (std::size_t i = 0; i < vertex_info.size(); ++i) {
    const auto* w = kept.at(vertex_info[i].waypoint);
    double kg = heuristic_kg(aircraft, w->pos, t_wp->pos);
    double shaved = kg * (1.0 - 1e-6) * static_cast<double>(kCostScale);
    heuristic[i] = std::max<Cost>(0, static_cast<Cost>(std::floor(shaved)));
  }

  CompiledInstance out{
      LcspInstance{std::move(dag), std::move(formula), std::move(defs),
                   {}, std::move(heuristic)},
      std::move(vertex_info),
      std::move(durations),
      origin,
      destination,
      dropped};
  return out;
}

}  // namespace lcsp::flight
