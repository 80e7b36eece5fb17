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

#include "lcsp/solver/node_selection.hpp"

#include <cassert>
#include <optional>

namespace lcsp {

namespace {

std::size_t best_first(std::span<const OpenNode> open) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < open.size(); ++i) {
    if (open[i].relax < open[best].relax) best = i;
  }
  return best;
}

std::size_t most_feasible(std::span<const OpenNode> open) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < open.size(); ++i) {
    if (open[i].violated < open[best].violated) best = i;
  }
  return best;
}

std::size_t projection(std::span<const OpenNode> open,
                       const SelectContext& ctx) {
  if (ctx.incumbent_cost == kInfCost || !ctx.root_solved ||
      ctx.root_violated == 0) {
    return best_first(open);
  }
  double ratio =
      (static_cast<double>(ctx.incumbent_cost) -
       static_cast<double>(ctx.root_relax)) /
      static_cast<double>(ctx.root_violated);
  std::size_t best = 0;
  double best_score = 0;
  for (std::size_t i = 0; i < open.size(); ++i) {
    double score = static_cast<double>(open[i].relax) +
                   ratio * static_cast<double>(open[i].violated);
    if (i == 0 || score < best_score) {
      best = i;
      best_score = score;
    }
  }
  return best;
}

// Most recently pushed child of the current node, else a sibling.
std::optional<std::size_t> plunge_step(std::span<const OpenNode> open,
                                       const SelectContext& ctx) {
  if (ctx.current_node < 0) return std::nullopt;
  for (std::size_t i = open.size(); i-- > 0;) {
    if (open[i].parent == ctx.current_node) return i;
  }
  if (ctx.current_parent >= 0) {
    for (std::size_t i = open.size(); i-- > 0;) {
      if (open[i].parent == ctx.current_parent) return i;
    }
  }
  return std::nullopt;
}

}  // namespace

std::size_t select_node(std::span<const OpenNode> open, NodeRule rule,
                        const SelectContext& ctx) {
  assert(!open.empty());
  switch (rule) {
    case NodeRule::Dfs:
      return open.size() - 1;
    case NodeRule::MostFeasible:
      return most_feasible(open);
    case NodeRule::BestFirst:
      return best_first(open);
    case NodeRule::BestFirstPlunge: {
      if (auto i = plunge_step(open, ctx)) return *i;
      return best_first(open);
    }
    case NodeRule::Projection:
      return projection(open, ctx);
    case NodeRule::Hybrid: {
      if (ctx.plunge_depth < ctx.plunge_limit) {
        if (auto i = plunge_step(open, ctx)) return *i;
      }
      return best_first(open);
    }
  }
  return 0;
}

}  // namespace lcsp
