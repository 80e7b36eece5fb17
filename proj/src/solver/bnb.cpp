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

#include "lcsp/solver/bnb.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>

namespace lcsp {

namespace {

double now_s() {
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

std::size_t BnbSolver::PathHash::operator()(
    const std::vector<ArcId>& v) const {
  std::size_t h = 1469598103934665603ull;
  for (ArcId a : v) {
    h ^= static_cast<std::size_t>(a) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

BnbSolver::BnbSolver(const LcspInstance& instance, SolverConfig config)
    : inst_(instance),
      cfg_(config),
      trail_(instance.formula.num_vars()),
      cond_(instance.formula),
      induced_(instance.dag) {
  cfg_.validate();
  if (cfg_.sp_engine == SpEngineKind::Lpa) {
    lpa_.emplace(inst_.dag, inst_.heuristic);
    lpa_->set_rebuild_fraction(cfg_.rebuild_fraction);
  }
  if (cfg_.branch_rule == BranchRule::Cvds) {
    cvds_.emplace(inst_.formula, cfg_.cvds_bump, cfg_.cvds_decay,
                  cfg_.cvds_decay_interval);
  }
}

bool BnbSolver::limits_hit() const {
  if (stats_.nodes >= cfg_.node_limit) return true;
  if (now_s() - start_time_ > cfg_.time_limit_s) return true;
  return false;
}

GraphDiff BnbSolver::diff_against_engine() const {
  GraphDiff diff;
  std::span<const char> want = induced_.active_mask();
  std::span<const char> have = lpa_->active_mask();
  for (ArcId a = 0; a < inst_.dag.num_arcs(); ++a) {
    std::size_t i = static_cast<std::size_t>(a);
    if (want[i] == have[i]) continue;
    if (want[i]) {
      diff.inserted.push_back(a);
    } else {
      diff.deleted.push_back(a);
    }
  }
  return diff;
}

void BnbSolver::record_relaxation_path(const Path& p) {
  if (!seen_paths_.insert(p.arcs).second) {
    ++stats_.duplicate_relaxation_paths;
  }
}

void BnbSolver::activate_ancestors(NodeId id) {
  std::vector<NodeId> path;
  for (NodeId x = nodes_[static_cast<std::size_t>(id)].parent; x != kNoNode;
       x = nodes_[static_cast<std::size_t>(x)].parent) {
    path.push_back(x);
  }
  std::reverse(path.begin(), path.end());

  std::size_t common = 0;
  while (common < path.size() && common < active_chain_.size() &&
         path[common] == active_chain_[common]) {
    ++common;
  }
  active_chain_.resize(common);
  if (!active_chain_.empty()) {
    const Node& top = nodes_[static_cast<std::size_t>(active_chain_.back())];
    trail_.rollback(top.trail_mark);
    cond_.rollback(top.cond_mark);
    induced_.rollback(top.induced_mark);
    enforce_cursor_ = top.enforce_cursor_mark;
  } else {
    // Only the root activates against the pristine state.
    assert(path.empty() && trail_.empty());
  }

  // Replay the divergent ancestors; all of them branched when originally
  // processed, so their fixpoints are feasible and deterministic.
  for (std::size_t i = common; i < path.size(); ++i) {
    Node& m = nodes_[static_cast<std::size_t>(path[i])];
    bool ok = trail_.push(m.branch_lit, Reason::Decision);
    assert(ok);
    (void)ok;
    cond_.apply(m.branch_lit);
    PropState st{trail_, cond_, induced_, enforce_cursor_};
    LoopResult r = run_propagation_loop(st, LoopOptions{cfg_.pure_literal});
    assert(r == LoopResult::Fixpoint);
    (void)r;
    m.trail_mark = trail_.mark();
    m.cond_mark = cond_.mark();
    m.induced_mark = induced_.mark();
    m.enforce_cursor_mark = enforce_cursor_;
    active_chain_.push_back(path[i]);
  }
}

SpOutcome BnbSolver::relax_node(NodeId id, bool* reused) {
  Node& node = nodes_[static_cast<std::size_t>(id)];
  *reused = false;
  if (cfg_.parent_path_check && node.parent_path &&
      path_in_graph(*node.parent_path, induced_)) {
    *reused = true;
    ++stats_.parent_path_reuses;
    SpOutcome out;
    out.status = SpOutcome::Status::PathFound;
    out.path = *node.parent_path;
    return out;
  }

  double sp_start = now_s();
  SpOutcome out;
  if (lpa_) {
    lpa_->apply_diff(diff_against_engine());
    out = lpa_->compute(best_cost_);
    const LpaSearchStats& ls = lpa_->last_search();
    stats_.arc_relaxations += ls.arc_relaxations;
    stats_.lpa_underconsistent_pops += ls.underconsistent_pops;
    stats_.lpa_reopens += ls.reopens;
    stats_.lpa_max_in_scans_per_vertex = std::max(
        stats_.lpa_max_in_scans_per_vertex, ls.max_in_scans_per_vertex);
    stats_.lpa_keys_monotone = stats_.lpa_keys_monotone && ls.keys_monotone;
  } else {
    SpCounters c;
    out = shortest_path(induced_, inst_.heuristic, best_cost_, &c);
    stats_.arc_relaxations += c.arc_relaxations;
  }
  ++stats_.sp_searches;
  stats_.time_sp_s += now_s() - sp_start;
  if (out.status == SpOutcome::Status::PathFound) {
    record_relaxation_path(out.path);
  }
  return out;
}

double BnbSolver::probe_gamma_cost(Lit probe, Cost base_cost,
                                   bool* infeasible) {
  *infeasible = false;
  Trail::Mark tm = trail_.mark();
  ConditioningState::Mark cm = cond_.mark();
  InducedDag::Mark im = induced_.mark();
  std::size_t cursor = enforce_cursor_;
  bool ok = trail_.push(probe, Reason::Decision);
  assert(ok);
  (void)ok;
  cond_.apply(probe);
  PropState st{trail_, cond_, induced_, enforce_cursor_};
  LoopResult r = run_propagation_loop(st, LoopOptions{cfg_.pure_literal});
  double gamma = cfg_.strong_gamma_cap;
  if (r == LoopResult::Fixpoint) {
    double sp_start = now_s();
    SpCounters c;
    SpOutcome out = shortest_path(induced_, inst_.heuristic, kInfCost, &c);
    ++stats_.sp_searches;
    stats_.arc_relaxations += c.arc_relaxations;
    stats_.time_sp_s += now_s() - sp_start;
    if (out.status == SpOutcome::Status::PathFound) {
      gamma = cost_to_units(out.path.cost - base_cost);
    } else {
      *infeasible = true;
    }
  } else {
    *infeasible = true;
  }
  trail_.rollback(tm);
  cond_.rollback(cm);
  induced_.rollback(im);
  enforce_cursor_ = cursor;
  return gamma;
}

Var BnbSolver::strong_branch_choice(std::span<const Var> conflict,
                                    Cost path_cost) {
  double best_score = -1;
  Var best = kNoVar;
  int evaluated = 0;
  int no_improve = 0;
  int total = static_cast<int>(conflict.size());
  for (Var v : conflict) {
    if (evaluated > 0) {
      // Stop once the score stagnated for L * (1 - xi) evaluations, with xi
      // the fraction of conflict members not yet evaluated in this call.
      double xi = static_cast<double>(total - evaluated) /
                  static_cast<double>(total);
      double threshold = cfg_.strong_lookahead * (1.0 - xi);
      if (static_cast<double>(no_improve) >= threshold) break;
    }
    bool up_inf = false, down_inf = false;
    double up = probe_gamma_cost(Lit::positive(v), path_cost, &up_inf);
    double down = probe_gamma_cost(Lit::negative(v), path_cost, &down_inf);
    if (up_inf) up = cfg_.strong_gamma_cap;
    if (down_inf) down = cfg_.strong_gamma_cap;
    double score = product_score(up, down, cfg_.epsilon);
    ++evaluated;
    if (score > best_score) {
      best_score = score;
      best = v;
      no_improve = 0;
    } else {
      ++no_improve;
    }
  }
  return best;
}

Var BnbSolver::pick_branch_variable(const Conflict& conflict,
                                    const std::vector<int>& violated,
                                    Cost path_cost) {
  std::vector<Var> cands = conflict.vars;
  if (cfg_.conflict_flavor == ConflictFlavor::GraphOnly && cands.empty()) {
    // Violated clauses hold only undefined free variables. Prefer any
    // unassigned graph variable (keeps branching graph-exclusive); once all
    // graph variables are assigned the induced graph is frozen and free
    // branching cannot repeat a relaxation.
    for (Var v = 0; v < inst_.formula.num_vars(); ++v) {
      if (inst_.formula.is_graph_var(v) && !trail_.assigned(v)) {
        cands.push_back(v);
        break;
      }
    }
    if (cands.empty()) {
      for (int ci : violated) {
        for (Lit l : inst_.formula.clause(ci).lits) {
          if (!trail_.assigned(l.var())) cands.push_back(l.var());
        }
      }
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    }
  }
  assert(!cands.empty());

  switch (cfg_.branch_rule) {
    case BranchRule::Clause: {
      Var v = clause_rule_choice(cond_, violated);
      if (cfg_.conflict_flavor == ConflictFlavor::Standard) return v;
      if (inst_.formula.is_graph_var(v) && !trail_.assigned(v)) return v;
      std::vector<Var> expanded;
      inst_.defs.expand_to_graph_vars(v, inst_.formula, expanded);
      std::erase_if(expanded, [&](Var g) { return trail_.assigned(g); });
      if (!expanded.empty()) {
        return *std::min_element(expanded.begin(), expanded.end());
      }
      return cands.front();
    }
    case BranchRule::Moms:
      return moms_choice(cond_, cands);
    case BranchRule::Sup:
    case BranchRule::Dup: {
      double best_score = -1;
      Var best = kNoVar;
      for (Var v : cands) {
        GammaPair g;
        if (cfg_.branch_rule == BranchRule::Sup) {
          g = sup_gammas(cond_, trail_, v);
        } else {
          PropState st{trail_, cond_, induced_, enforce_cursor_};
          g = dup_gammas(st, LoopOptions{cfg_.pure_literal}, v);
        }
        double up = g.up_infeasible ? cfg_.up_gamma_cap : g.up;
        double down = g.down_infeasible ? cfg_.up_gamma_cap : g.down;
        double score = product_score(up, down, cfg_.epsilon);
        if (score > best_score) {
          best_score = score;
          best = v;
        }
      }
      return best;
    }
    case BranchRule::Cvds: {
      Var best = cands.front();
      for (Var v : cands) {
        if (cvds_->score(v) > cvds_->score(best)) best = v;
      }
      return best;
    }
    case BranchRule::Strong:
      return strong_branch_choice(cands, path_cost);
  }
  return cands.front();
}

Solution BnbSolver::solve() {
  start_time_ = now_s();
  stats_ = SolveStats{};

  nodes_.clear();
  nodes_.push_back(Node{});
  open_.assign(1, 0);
  active_chain_.clear();
  seen_paths_.clear();
  best_path_.reset();
  best_cost_ = kInfCost;
  best_witness_.clear();
  root_solved_ = false;
  current_node_ = kNoNode;
  plunge_depth_ = 0;

  Cost running_max_relax = 0;
  SolveStatus status = SolveStatus::Infeasible;
  bool limit = false;

  while (!open_.empty()) {
    if (limits_hit()) {
      limit = true;
      break;
    }

    // Node selection.
    std::vector<OpenNode> view;
    view.reserve(open_.size());
    for (NodeId id : open_) {
      const Node& n = nodes_[static_cast<std::size_t>(id)];
      view.push_back(OpenNode{id, n.parent, n.relax, n.violated, n.depth});
    }
    SelectContext ctx;
    ctx.current_node = current_node_;
    ctx.current_parent =
        current_node_ == kNoNode
            ? kNoNode
            : nodes_[static_cast<std::size_t>(current_node_)].parent;
    ctx.incumbent_cost = best_cost_;
    ctx.root_relax = root_relax_;
    ctx.root_violated = root_violated_;
    ctx.root_solved = root_solved_;
    ctx.plunge_depth = plunge_depth_;
    ctx.plunge_limit = cfg_.plunge_depth_limit;
    std::size_t idx = select_node(view, cfg_.node_rule, ctx);
    NodeId nid = open_[idx];
    open_.erase(open_.begin() + static_cast<std::ptrdiff_t>(idx));

    if (cfg_.node_rule == NodeRule::Hybrid) {
      const Node& picked = nodes_[static_cast<std::size_t>(nid)];
      bool plunged =
          current_node_ != kNoNode &&
          (picked.parent == current_node_ ||
           (ctx.current_parent != kNoNode && picked.parent == ctx.current_parent));
      plunge_depth_ = plunged ? plunge_depth_ + 1 : 0;
    }

    ++stats_.nodes;
    running_max_relax =
        std::max(running_max_relax, nodes_[static_cast<std::size_t>(nid)].relax);

    // Bound pruning before touching any state.
    if (nodes_[static_cast<std::size_t>(nid)].relax >= best_cost_) {
      ++stats_.pruned_by_bound;
      current_node_ = nid;
      continue;
    }

    activate_ancestors(nid);
    Node& node = nodes_[static_cast<std::size_t>(nid)];
    Trail::Mark parent_trail = trail_.mark();
    ConditioningState::Mark parent_cond = cond_.mark();
    InducedDag::Mark parent_induced = induced_.mark();
    std::size_t parent_cursor = enforce_cursor_;

    if (node.branch_lit.valid()) {
      bool ok = trail_.push(node.branch_lit, Reason::Decision);
      assert(ok);
      (void)ok;
      cond_.apply(node.branch_lit);
    }
    PropState st{trail_, cond_, induced_, enforce_cursor_};
    LoopResult lr = run_propagation_loop(st, LoopOptions{cfg_.pure_literal});
    if (lr != LoopResult::Fixpoint) {
      if (lr == LoopResult::LogicInfeasible) {
        ++stats_.logic_infeasible;
        if (cvds_) cvds_->on_empty_clause(trail_);
      } else {
        ++stats_.graph_infeasible;
      }
      trail_.rollback(parent_trail);
      cond_.rollback(parent_cond);
      induced_.rollback(parent_induced);
      enforce_cursor_ = parent_cursor;
      current_node_ = nid;
      continue;
    }
    node.trail_mark = trail_.mark();
    node.cond_mark = cond_.mark();
    node.induced_mark = induced_.mark();
    node.enforce_cursor_mark = enforce_cursor_;
    active_chain_.push_back(nid);

    bool reused = false;
    SpOutcome sp = relax_node(nid, &reused);
    switch (sp.status) {
      case SpOutcome::Status::Disconnected:
        ++stats_.graph_infeasible;
        current_node_ = nid;
        continue;
      case SpOutcome::Status::BoundExceeded:
        ++stats_.pruned_by_bound;
        current_node_ = nid;
        continue;
      case SpOutcome::Status::PathFound:
        break;
    }
    if (sp.path.cost >= best_cost_) {
      ++stats_.pruned_by_bound;
      current_node_ = nid;
      continue;
    }

    if (nid == 0) {
      root_relax_ = sp.path.cost;
      root_solved_ = true;
    }

    // Tentative assignment: trail plus the assignment induced by the path.
    std::vector<char> on_path(static_cast<std::size_t>(inst_.dag.num_arcs()),
                              0);
    for (ArcId a : sp.path.arcs) on_path[static_cast<std::size_t>(a)] = 1;
    std::vector<LBool> base(
        static_cast<std::size_t>(inst_.formula.num_vars()), LBool::Undef);
    for (std::size_t i = 0; i < trail_.size(); ++i) {
      Lit l = trail_.lit_at(i);
      base[static_cast<std::size_t>(l.var())] = lbool_of(l.is_positive());
    }
    for (Var v = 0; v < inst_.formula.num_vars(); ++v) {
      if (!inst_.formula.is_graph_var(v)) continue;
      ArcId a = inst_.dag.variable_arc(v);
      if (a == kNoArc) continue;
      LBool pv = lbool_of(on_path[static_cast<std::size_t>(a)] != 0);
      assert(base[static_cast<std::size_t>(v)] == LBool::Undef ||
             base[static_cast<std::size_t>(v)] == pv);
      base[static_cast<std::size_t>(v)] = pv;
    }
    CompletedAssignment tentative(inst_.formula, inst_.defs, std::move(base));
    std::vector<int> violated = violated_clauses(cond_, tentative);

    if (nid == 0) root_violated_ = static_cast<int>(violated.size());

    if (violated.empty()) {
      best_path_ = std::make_shared<const Path>(sp.path);
      best_cost_ = sp.path.cost;
      best_witness_ = tentative.to_literals();
      ++stats_.incumbent_updates;
      stats_.incumbent_history.emplace_back(stats_.nodes, best_cost_);
      stats_.max_relax_before_last_incumbent = running_max_relax;
      current_node_ = nid;
      continue;
    }

    Conflict conflict =
        extract_conflict(cond_, trail_, tentative, violated,
                         cfg_.conflict_flavor,
                         cfg_.conflict_flavor == ConflictFlavor::GraphOnly
                             ? &inst_.defs
                             : nullptr);
    if (cvds_) cvds_->on_path_conflict(trail_, conflict.vars);

    Var x = pick_branch_variable(conflict, violated, sp.path.cost);
    assert(x != kNoVar && !trail_.assigned(x));

    auto shared_path = reused ? node.parent_path
                              : std::make_shared<const Path>(sp.path);
    int v_count = static_cast<int>(violated.size());
    Node down;
    down.parent = nid;
    down.branch_lit = Lit::negative(x);
    down.depth = node.depth + 1;
    down.relax = sp.path.cost;
    down.violated = v_count;
    down.parent_path = shared_path;
    Node up = down;
    up.branch_lit = Lit::positive(x);
    // Down branch first so the up branch is explored first under DFS.
    nodes_.push_back(down);
    open_.push_back(static_cast<NodeId>(nodes_.size()) - 1);
    nodes_.push_back(up);
    open_.push_back(static_cast<NodeId>(nodes_.size()) - 1);
    ++stats_.branched;
    current_node_ = nid;
  }

  stats_.time_total_s = now_s() - start_time_;
  Solution sol;
  if (limit) {
    status = SolveStatus::LimitReached;
  } else {
    status = best_path_ ? SolveStatus::Optimal : SolveStatus::Infeasible;
  }
  sol.status = status;
  if (best_path_) {
    sol.path = *best_path_;
    sol.cost = best_cost_;
    sol.witness = best_witness_;
  }
  return sol;
}

Solution solve(const LcspInstance& instance, const SolverConfig& config,
               SolveStats* stats) {
  BnbSolver solver(instance, config);
  Solution sol = solver.solve();
  if (stats) *stats = solver.stats();
  return sol;
}

}  // namespace lcsp
