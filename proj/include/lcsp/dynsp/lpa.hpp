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

#ifndef LCSP_DYNSP_LPA_HPP
#define LCSP_DYNSP_LPA_HPP

#include <cstdint>
#include <queue>
#include <span>
#include <vector>

#include "lcsp/dag/shortest_path.hpp"

namespace lcsp {

// Arc-set delta between the previously solved induced graph and the next
// one. Deleted and inserted sets are disjoint.
struct GraphDiff {
  std::vector<ArcId> deleted;
  std::vector<ArcId> inserted;

  bool empty() const { return deleted.empty() && inserted.empty(); }
  std::size_t size() const { return deleted.size() + inserted.size(); }
};

struct LpaSearchStats {
  std::int64_t pops = 0;
  std::int64_t arc_relaxations = 0;
  std::int64_t in_scans = 0;
  int max_in_scans_per_vertex = 0;
  std::int64_t underconsistent_pops = 0;
  std::int64_t reopens = 0;  // settled vertex settled again in one search
  bool keys_monotone = true;
};

// Dynamic one-to-one shortest path with two labels per vertex: a distance
// estimate d and a one-step look-ahead rhs, plus a priority queue of
// inconsistent vertices keyed by min(d, rhs) + h.
//
// Deletions are handled by the shortest-path-tree variant: when a tree arc
// disappears, the whole subtree below it is invalidated (d set to infinity)
// and rhs is rebuilt for exactly the vertices whose look-ahead witness died.
// Inserted arcs only refresh the head's rhs and are not propagated along the
// tree. As a result, every full in-neighborhood scan happens in the
// initialization phase, at most once per vertex and search, and the main
// phase only ever settles overconsistent vertices.
//
// compute() pops through key ties before stopping, so the tight-arc set seen
// by path extraction is a pure function of the current graph; the extracted
// path is the same canonical lexmin sequence the static engine returns.
class LpaEngine {
 public:
  // `heuristic` must be admissible and consistent; empty means zero.
  LpaEngine(const Dag& dag, std::vector<Cost> heuristic);

  void reset();
  void apply_diff(const GraphDiff& diff);
  SpOutcome compute(Cost incumbent_bound);

  // Fraction of active arcs above which apply_diff rebuilds from scratch.
  void set_rebuild_fraction(double f) { rebuild_fraction_ = f; }

  std::span<const char> active_mask() const { return active_; }
  int active_arc_count() const { return active_count_; }
  Cost distance(VertexId v) const { return d_[static_cast<std::size_t>(v)]; }
  Cost lookahead(VertexId v) const { return rhs_[static_cast<std::size_t>(v)]; }

  const LpaSearchStats& last_search() const { return last_; }
  const LpaSearchStats& totals() const { return totals_; }

 private:
  struct QEntry {
    Cost key;
    VertexId v;
    bool operator>(const QEntry& o) const {
      return key != o.key ? key > o.key : v > o.v;
    }
  };

  Cost heuristic_at(VertexId v) const {
    return h_.empty() ? 0 : h_[static_cast<std::size_t>(v)];
  }
  Cost key_of(VertexId v) const {
    std::size_t i = static_cast<std::size_t>(v);
    return cost_add(std::min(d_[i], rhs_[i]), heuristic_at(v));
  }
  bool consistent(VertexId v) const {
    std::size_t i = static_cast<std::size_t>(v);
    return d_[i] == rhs_[i];
  }
  void push_if_inconsistent(VertexId v);
  void full_rhs_recompute(VertexId v);
  void relax_out_arcs(VertexId v);
  void begin_search();
  void note_in_scan(VertexId v);
  void totals_merge_pending();

  const Dag* dag_;
  std::vector<Cost> h_;
  std::vector<char> active_;
  int active_count_;
  std::vector<Cost> d_, rhs_;
  std::vector<ArcId> parent_arc_;  // tree arc that justified d
  std::vector<ArcId> rhs_arc_;     // witness arc of the current rhs
  std::priority_queue<QEntry, std::vector<QEntry>, std::greater<>> queue_;

  double rebuild_fraction_ = 0.25;
  bool search_open_ = false;
  std::uint64_t epoch_ = 0;
  std::vector<std::uint64_t> scan_epoch_, settle_epoch_;
  std::vector<int> scan_count_;
  std::vector<char> flag_s_, flag_r_;
  Cost last_pop_key_ = 0;
  LpaSearchStats last_, totals_;
};

}  // namespace lcsp

#endif  // LCSP_DYNSP_LPA_HPP
