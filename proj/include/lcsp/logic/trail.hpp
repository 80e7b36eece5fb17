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

#ifndef LCSP_LOGIC_TRAIL_HPP
#define LCSP_LOGIC_TRAIL_HPP

#include <cassert>
#include <cstddef>
#include <vector>

#include "lcsp/logic/cnf.hpp"

namespace lcsp {

enum class Reason : std::uint8_t {
  Decision,
  UnitPropagation,
  PureLiteral,
  Enforcement,
};

// Ordered, contradiction-free assignment with exact rollback to any mark.
class Trail {
 public:
  explicit Trail(int num_vars)
      : value_(static_cast<std::size_t>(num_vars), LBool::Undef) {}

  using Mark = std::size_t;

  Mark mark() const { return lits_.size(); }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }

  // Appends the literal. Returns false (trail unchanged) if the opposite
  // literal is already assigned; pushing an already-true literal is a no-op.
  bool push(Lit l, Reason r) {
    LBool v = value(l.var());
    if (v != LBool::Undef) return lbool_of(l.is_positive()) == v;
    value_[static_cast<std::size_t>(l.var())] = lbool_of(l.is_positive());
    lits_.push_back(l);
    reasons_.push_back(r);
    return true;
  }

  void rollback(Mark m) {
    assert(m <= lits_.size());
    while (lits_.size() > m) {
      value_[static_cast<std::size_t>(lits_.back().var())] = LBool::Undef;
      lits_.pop_back();
      reasons_.pop_back();
    }
  }

  LBool value(Var v) const { return value_[static_cast<std::size_t>(v)]; }
  bool assigned(Var v) const { return value(v) != LBool::Undef; }
  bool is_true(Lit l) const {
    return value(l.var()) == lbool_of(l.is_positive());
  }
  bool is_false(Lit l) const {
    return value(l.var()) == lbool_of(!l.is_positive());
  }

  Lit lit_at(std::size_t i) const { return lits_[i]; }
  Reason reason_at(std::size_t i) const { return reasons_[i]; }

  int num_vars() const { return static_cast<int>(value_.size()); }

 private:
  std::vector<Lit> lits_;
  std::vector<Reason> reasons_;
  std::vector<LBool> value_;
};

}  // namespace lcsp

#endif  // LCSP_LOGIC_TRAIL_HPP
