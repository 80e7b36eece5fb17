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

#include "lcsp/dynsp/lpa.hpp"

#include <algorithm>
#include <cassert>

namespace lcsp {

LpaEngine::LpaEngine(const Dag& dag, std::vector<Cost> heuristic)
    : dag_(&dag),
      h_(std::move(heuristic)),
      active_(static_cast<std::size_t>(dag.num_arcs()), 1),
      active_count_(dag.num_arcs()),
      d_(static_cast<std::size_t>(dag.num_vertices()), kInfCost),
      rhs_(static_cast<std::size_t>(dag.num_vertices()), kInfCost),
      parent_arc_(static_cast<std::size_t>(dag.num_vertices()), kNoArc),
      rhs_arc_(static_cast<std::size_t>(dag.num_vertices()), kNoArc),
      scan_epoch_(static_cast<std::size_t>(dag.num_vertices()), 0),
      settle_epoch_(static_cast<std::size_t>(dag.num_vertices()), 0),
      scan_count_(static_cast<std::size_t>(dag.num_vertices()), 0),
      flag_s_(static_cast<std::size_t>(dag.num_vertices()), 0),
      flag_r_(static_cast<std::size_t>(dag.num_vertices()), 0) {
  assert(h_.empty() ||
         h_.size() == static_cast<std::size_t>(dag.num_vertices()));
  reset();
}

void LpaEngine::reset() {
  std::fill(d_.begin(), d_.end(), kInfCost);
  std::fill(rhs_.begin(), rhs_.end(), kInfCost);
  std::fill(parent_arc_.begin(), parent_arc_.end(), kNoArc);
  std::fill(rhs_arc_.begin(), rhs_arc_.end(), kNoArc);
  queue_ = {};
  rhs_[static_cast<std::size_t>(dag_->source())] = 0;
  push_if_inconsistent(dag_->source());
}

void LpaEngine::begin_search() {
  if (search_open_) return;
  search_open_ = true;
  ++epoch_;
  last_ = LpaSearchStats{};
  last_pop_key_ = 0;
}

void LpaEngine::note_in_scan(VertexId v) {
  std::size_t i = static_cast<std::size_t>(v);
  if (scan_epoch_[i] != epoch_) {
    scan_epoch_[i] = epoch_;
    scan_count_[i] = 0;
  }
  ++scan_count_[i];
  ++last_.in_scans;
  last_.max_in_scans_per_vertex =
      std::max(last_.max_in_scans_per_vertex, scan_count_[i]);
}

void LpaEngine::push_if_inconsistent(VertexId v) {
  if (!consistent(v)) queue_.push(QEntry{key_of(v), v});
}

void LpaEngine::full_rhs_recompute(VertexId v) {
  std::size_t i = static_cast<std::size_t>(v);
  note_in_scan(v);
  Cost best = kInfCost;
  ArcId witness = kNoArc;
  for (ArcId a : dag_->in_arcs(v)) {
    if (!active_[static_cast<std::size_t>(a)]) continue;
    ++last_.arc_relaxations;
    const Arc& arc = dag_->arc(a);
    Cost cand = cost_add(d_[static_cast<std::size_t>(arc.tail)], arc.weight);
    if (cand == kInfCost) continue;
    if (cand < best || (cand == best && a < witness)) {
      best = cand;
      witness = a;
    }
  }
  rhs_[i] = best;
  rhs_arc_[i] = witness;
}

void LpaEngine::relax_out_arcs(VertexId v) {
  Cost dv = d_[static_cast<std::size_t>(v)];
  for (ArcId a : dag_->out_arcs(v)) {
    if (!active_[static_cast<std::size_t>(a)]) continue;
    ++last_.arc_relaxations;
    const Arc& arc = dag_->arc(a);
    if (arc.head == dag_->source()) continue;
    std::size_t hi = static_cast<std::size_t>(arc.head);
    Cost cand = cost_add(dv, arc.weight);
    if (cand == kInfCost) continue;
    if (cand < rhs_[hi] || (cand == rhs_[hi] && a < rhs_arc_[hi])) {
      rhs_[hi] = cand;
      rhs_arc_[hi] = a;
      push_if_inconsistent(arc.head);
    }
  }
}

void LpaEngine::apply_diff(const GraphDiff& diff) {
  begin_search();
  for (ArcId a : diff.deleted) {
    assert(active_[static_cast<std::size_t>(a)]);
    active_[static_cast<std::size_t>(a)] = 0;
    --active_count_;
  }
  for (ArcId a : diff.inserted) {
    assert(!active_[static_cast<std::size_t>(a)]);
    active_[static_cast<std::size_t>(a)] = 1;
    ++active_count_;
  }
  if (active_count_ > 0 &&
      static_cast<double>(diff.size()) >
          rebuild_fraction_ * static_cast<double>(active_count_)) {
    reset();
    return;
  }

  // Invalidate the tree subtrees hanging off deleted tree arcs.
  std::vector<VertexId> subtree;
  std::vector<VertexId> stack;
  for (ArcId a : diff.deleted) {
    VertexId head = dag_->arc(a).head;
    if (parent_arc_[static_cast<std::size_t>(head)] == a &&
        !flag_s_[static_cast<std::size_t>(head)]) {
      flag_s_[static_cast<std::size_t>(head)] = 1;
      stack.push_back(head);
    }
  }
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    subtree.push_back(v);
    for (ArcId a : dag_->out_arcs(v)) {
      VertexId head = dag_->arc(a).head;
      if (parent_arc_[static_cast<std::size_t>(head)] == a &&
          !flag_s_[static_cast<std::size_t>(head)]) {
        flag_s_[static_cast<std::size_t>(head)] = 1;
        stack.push_back(head);
      }
    }
  }
  for (VertexId v : subtree) {
    d_[static_cast<std::size_t>(v)] = kInfCost;
    parent_arc_[static_cast<std::size_t>(v)] = kNoArc;
  }

  // Look-ahead rebuild set: the invalidated vertices, heads of deleted arcs,
  // and vertices whose rhs witness starts inside the invalidated set.
  std::vector<VertexId> rebuild;
  auto add_rebuild = [&](VertexId v) {
    if (v == dag_->source()) return;
    if (!flag_r_[static_cast<std::size_t>(v)]) {
      flag_r_[static_cast<std::size_t>(v)] = 1;
      rebuild.push_back(v);
    }
  };
  for (VertexId v : subtree) add_rebuild(v);
  for (ArcId a : diff.deleted) add_rebuild(dag_->arc(a).head);
  for (VertexId v : subtree) {
    for (ArcId a : dag_->out_arcs(v)) {
      if (!active_[static_cast<std::size_t>(a)]) continue;
      VertexId head = dag_->arc(a).head;
      ArcId w = rhs_arc_[static_cast<std::size_t>(head)];
      if (w != kNoArc && flag_s_[static_cast<std::size_t>(dag_->arc(w).tail)]) {
        add_rebuild(head);
      }
    }
  }
  std::sort(rebuild.begin(), rebuild.end());
  for (VertexId v : rebuild) full_rhs_recompute(v);

  // Inserted arcs refresh the head's look-ahead only.
  for (ArcId a : diff.inserted) {
    const Arc& arc = dag_->arc(a);
    if (arc.head == dag_->source()) continue;
    ++last_.arc_relaxations;
    std::size_t hi = static_cast<std::size_t>(arc.head);
    Cost cand = cost_add(d_[static_cast<std::size_t>(arc.tail)], arc.weight);
    if (cand == kInfCost) continue;
    if (cand < rhs_[hi] || (cand == rhs_[hi] && a < rhs_arc_[hi])) {
      rhs_[hi] = cand;
      rhs_arc_[hi] = a;
    }
  }

  for (VertexId v : rebuild) push_if_inconsistent(v);
  for (ArcId a : diff.inserted) push_if_inconsistent(dag_->arc(a).head);

  for (VertexId v : subtree) flag_s_[static_cast<std::size_t>(v)] = 0;
  for (VertexId v : rebuild) flag_r_[static_cast<std::size_t>(v)] = 0;
}

SpOutcome LpaEngine::compute(Cost incumbent_bound) {
  begin_search();
  VertexId t = dag_->target();
  SpOutcome out;
  for (;;) {
    while (!queue_.empty()) {
      const QEntry& top = queue_.top();
      if (consistent(top.v) || key_of(top.v) != top.key) {
        queue_.pop();
        continue;
      }
      break;
    }
    Cost kt = key_of(t);
    bool t_cons = consistent(t);
    // Pop through key ties so every vertex on a tight path is settled.
    if (t_cons && (queue_.empty() || queue_.top().key > kt)) break;
    if (queue_.empty()) break;
    QEntry top = queue_.top();
    if (top.key >= incumbent_bound) {
      search_open_ = false;
      totals_merge_pending();
      out.status = SpOutcome::Status::BoundExceeded;
      return out;
    }
    queue_.pop();
    VertexId v = top.v;
    ++last_.pops;
    if (last_.pops > 1 && top.key < last_pop_key_) last_.keys_monotone = false;
    last_pop_key_ = top.key;

    std::size_t i = static_cast<std::size_t>(v);
    if (d_[i] > rhs_[i]) {
      if (settle_epoch_[i] == epoch_) ++last_.reopens;
      settle_epoch_[i] = epoch_;
      d_[i] = rhs_[i];
      parent_arc_[i] = rhs_arc_[i];
      relax_out_arcs(v);
    } else {
      // Underconsistent vertices are not produced by the invalidation
      // scheme; handled anyway to stay safe on unexpected inputs.
      ++last_.underconsistent_pops;
      d_[i] = kInfCost;
      parent_arc_[i] = kNoArc;
      full_rhs_recompute(v);
      push_if_inconsistent(v);
      for (ArcId a : dag_->out_arcs(v)) {
        if (!active_[static_cast<std::size_t>(a)]) continue;
        VertexId head = dag_->arc(a).head;
        if (head == dag_->source()) continue;
        if (rhs_arc_[static_cast<std::size_t>(head)] == a) {
          full_rhs_recompute(head);
          push_if_inconsistent(head);
        }
      }
    }
  }
  search_open_ = false;
  totals_merge_pending();

  std::size_t ti = static_cast<std::size_t>(t);
  if (d_[ti] == kInfCost) {
    out.status = SpOutcome::Status::Disconnected;
    return out;
  }
  if (d_[ti] >= incumbent_bound) {
    out.status = SpOutcome::Status::BoundExceeded;
    return out;
  }
  out.status = SpOutcome::Status::PathFound;
  out.path.arcs =
      extract_lexmin_path(*dag_, active_, d_, dag_->source(), t);
  out.path.cost = d_[ti];
  return out;
}

void LpaEngine::totals_merge_pending() {
  totals_.pops += last_.pops;
  totals_.arc_relaxations += last_.arc_relaxations;
  totals_.in_scans += last_.in_scans;
  totals_.max_in_scans_per_vertex = std::max(
      totals_.max_in_scans_per_vertex, last_.max_in_scans_per_vertex);
  totals_.underconsistent_pops += last_.underconsistent_pops;
  totals_.reopens += last_.reopens;
  totals_.keys_monotone = totals_.keys_monotone && last_.keys_monotone;
}

}  // namespace lcsp
