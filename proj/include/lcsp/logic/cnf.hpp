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

#ifndef LCSP_LOGIC_CNF_HPP
#define LCSP_LOGIC_CNF_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "lcsp/core.hpp"

namespace lcsp {

// Graph variables are tied to an arc of the routing graph; free variables
// (restriction selectors, aggregates, generator noise) are not.
enum class VarKind : std::uint8_t { Graph, Free };

enum class LBool : std::uint8_t { False = 0, True = 1, Undef = 2 };

inline LBool lbool_of(bool b) { return b ? LBool::True : LBool::False; }

// A literal is a variable with a polarity, packed as 2*var + sign so it can
// index occurrence tables directly. Negation is an involution.
class Lit {
 public:
  constexpr Lit() : code_(-2) {}

  static constexpr Lit positive(Var v) { return Lit(2 * v); }
  static constexpr Lit negative(Var v) { return Lit(2 * v + 1); }
  static constexpr Lit make(Var v, bool positive) {
    return positive ? Lit::positive(v) : Lit::negative(v);
  }

  constexpr Var var() const { return code_ >> 1; }
  constexpr bool is_positive() const { return (code_ & 1) == 0; }
  constexpr Lit operator~() const { return Lit(code_ ^ 1); }
  constexpr int index() const { return code_; }
  constexpr bool valid() const { return code_ >= 0; }

  friend constexpr bool operator==(Lit a, Lit b) { return a.code_ == b.code_; }
  friend constexpr bool operator!=(Lit a, Lit b) { return a.code_ != b.code_; }
  friend constexpr bool operator<(Lit a, Lit b) { return a.code_ < b.code_; }

 private:
  explicit constexpr Lit(std::int32_t code) : code_(code) {}
  std::int32_t code_;
};

inline constexpr Lit kNoLit{};

struct Clause {
  std::vector<Lit> lits;  // sorted by literal code, duplicates removed

  int size() const { return static_cast<int>(lits.size()); }
};

// Clause database with per-literal occurrence lists. Clauses are normalized
// on insertion: literals sorted, duplicates dropped. A tautological clause
// (x and ~x together) is dropped entirely and counted.
class CnfFormula {
 public:
  CnfFormula() = default;

  Var add_var(VarKind kind);
  void add_vars(int count, VarKind kind);

  // Returns the clause index, or -1 if the clause was a tautology.
  int add_clause(std::vector<Lit> lits);

  int num_vars() const { return static_cast<int>(kinds_.size()); }
  int num_clauses() const { return static_cast<int>(clauses_.size()); }
  VarKind kind(Var v) const { return kinds_[static_cast<std::size_t>(v)]; }
  bool is_graph_var(Var v) const { return kind(v) == VarKind::Graph; }

  const Clause& clause(int ci) const {
    return clauses_[static_cast<std::size_t>(ci)];
  }
  std::span<const int> occurrences(Lit l) const {
    return occ_[static_cast<std::size_t>(l.index())];
  }

  int dropped_tautologies() const { return dropped_tautologies_; }

  // Occurrence count of a variable over all clauses, either polarity.
  int occurrence_count(Var v) const;

 private:
  std::vector<Clause> clauses_;
  std::vector<VarKind> kinds_;
  std::vector<std::vector<int>> occ_;  // literal code -> clause indices
  int dropped_tautologies_ = 0;
};

}  // namespace lcsp

#endif  // LCSP_LOGIC_CNF_HPP
