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

#include "lcsp/io/lcsp_file.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "lcsp/errors.hpp"

namespace lcsp::io {

namespace {

struct Tokenizer {
  std::string file;
  int line_no = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(file, line_no, msg);
  }

  std::vector<std::string> split(const std::string& line) const {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
  }

  long to_int(const std::string& tok) const {
    try {
      std::size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size()) fail("malformed integer: " + tok);
      return v;
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      fail("malformed integer: " + tok);
    }
  }
};

}  // namespace

LcspInstance parse_lcsp(std::istream& in, const std::string& filename) {
  Tokenizer tz{filename};
  int num_vertices = -1;
  std::vector<Arc> arcs;
  std::optional<VertexId> source, target;
  int num_vars = -1;
  long clauses_expected = -1;
  std::vector<std::vector<long>> clause_lines;
  std::vector<std::pair<long, long>> maps;  // var (1-based), arc id
  struct DefLine {
    long var;
    DefKind kind;
    std::vector<long> lits;
    int line;
  };
  std::vector<DefLine> def_lines;

  std::string line;
  while (std::getline(in, line)) {
    ++tz.line_no;
    std::vector<std::string> tok = tz.split(line);
    if (tok.empty()) continue;
    if (tok[0] == "c") continue;
    if (tok[0] == "vertices") {
      if (tok.size() != 2) tz.fail("vertices expects one count");
      num_vertices = static_cast<int>(tz.to_int(tok[1]));
      if (num_vertices <= 0) tz.fail("vertex count must be positive");
    } else if (tok[0] == "arc") {
      if (tok.size() != 5) tz.fail("arc expects <id> <tail> <head> <weight>");
      long id = tz.to_int(tok[1]);
      if (id != static_cast<long>(arcs.size())) {
        tz.fail("arc ids must be dense and ascending");
      }
      long tail = tz.to_int(tok[2]);
      long head = tz.to_int(tok[3]);
      if (num_vertices < 0) tz.fail("arc before vertices line");
      if (tail < 0 || tail >= num_vertices || head < 0 ||
          head >= num_vertices) {
        tz.fail("arc endpoint out of range");
      }
      Cost w;
      try {
        w = cost_from_string(tok[4]);
      } catch (const Error& e) {
        tz.fail(e.what());
      }
      if (w < 0) tz.fail("arc weight must be non-negative");
      arcs.push_back(
          Arc{static_cast<VertexId>(tail), static_cast<VertexId>(head), w});
    } else if (tok[0] == "source" || tok[0] == "target") {
      if (tok.size() != 2) tz.fail(tok[0] + " expects one vertex");
      long v = tz.to_int(tok[1]);
      if (num_vertices < 0 || v < 0 || v >= num_vertices) {
        tz.fail(tok[0] + " vertex out of range");
      }
      (tok[0] == "source" ? source : target) = static_cast<VertexId>(v);
    } else if (tok[0] == "p") {
      if (tok.size() != 4 || tok[1] != "cnf") tz.fail("expected p cnf <vars> <clauses>");
      num_vars = static_cast<int>(tz.to_int(tok[2]));
      clauses_expected = tz.to_int(tok[3]);
      if (num_vars < 0 || clauses_expected < 0) tz.fail("negative cnf header");
    } else if (tok[0] == "map") {
      if (tok.size() != 3) tz.fail("map expects <var> <arc-id>");
      maps.emplace_back(tz.to_int(tok[1]), tz.to_int(tok[2]));
    } else if (tok[0] == "def") {
      if (tok.size() < 4) tz.fail("def expects <var> all|any <lits> 0");
      DefLine d;
      d.var = tz.to_int(tok[1]);
      d.line = tz.line_no;
      if (tok[2] == "all") {
        d.kind = DefKind::AllOf;
      } else if (tok[2] == "any") {
        d.kind = DefKind::AnyOf;
      } else {
        tz.fail("def kind must be all or any");
      }
      for (std::size_t i = 3; i < tok.size(); ++i) {
        d.lits.push_back(tz.to_int(tok[i]));
      }
      if (d.lits.empty() || d.lits.back() != 0) tz.fail("def line must end in 0");
      d.lits.pop_back();
      if (d.lits.empty()) tz.fail("def must name at least one literal");
      def_lines.push_back(std::move(d));
    } else {
      // A clause line: signed integers terminated by 0.
      if (num_vars < 0) tz.fail("clause before p cnf header");
      std::vector<long> lits;
      for (const std::string& t : tok) lits.push_back(tz.to_int(t));
      if (lits.empty() || lits.back() != 0) tz.fail("clause must end in 0");
      lits.pop_back();
      clause_lines.push_back(std::move(lits));
    }
  }

  if (num_vertices < 0) throw ParseError(filename, tz.line_no, "missing vertices line");
  if (!source || !target) throw ParseError(filename, tz.line_no, "missing source or target");
  if (num_vars < 0) throw ParseError(filename, tz.line_no, "missing p cnf header");
  if (static_cast<long>(clause_lines.size()) != clauses_expected) {
    throw ParseError(filename, tz.line_no, "clause count does not match header");
  }

  auto check_var = [&](long v1) {
    if (v1 < 1 || v1 > num_vars) {
      throw ParseError(filename, tz.line_no,
                       "variable out of range: " + std::to_string(v1));
    }
  };

  // Kinds: mapped variables are graph variables.
  std::vector<VarKind> kinds(static_cast<std::size_t>(num_vars),
                             VarKind::Free);
  for (const auto& [v1, arc] : maps) {
    check_var(v1);
    if (arc < 0 || arc >= static_cast<long>(arcs.size())) {
      throw ParseError(filename, tz.line_no,
                       "map references unknown arc " + std::to_string(arc));
    }
    if (kinds[static_cast<std::size_t>(v1 - 1)] == VarKind::Graph) {
      throw ParseError(filename, tz.line_no,
                       "variable mapped twice: " + std::to_string(v1));
    }
    kinds[static_cast<std::size_t>(v1 - 1)] = VarKind::Graph;
  }

  CnfFormula formula;
  for (VarKind k : kinds) formula.add_var(k);
  auto to_lit = [&](long signed_lit) {
    long v1 = signed_lit < 0 ? -signed_lit : signed_lit;
    check_var(v1);
    return Lit::make(static_cast<Var>(v1 - 1), signed_lit > 0);
  };
  for (const auto& lits : clause_lines) {
    std::vector<Lit> c;
    c.reserve(lits.size());
    for (long sl : lits) c.push_back(to_lit(sl));
    formula.add_clause(std::move(c));
  }

  Dag dag(num_vertices, std::move(arcs), *source, *target);
  std::vector<char> arc_mapped(static_cast<std::size_t>(dag.num_arcs()), 0);
  for (const auto& [v1, arc] : maps) {
    if (arc_mapped[static_cast<std::size_t>(arc)]) {
      throw ParseError(filename, tz.line_no,
                       "arc mapped twice: " + std::to_string(arc));
    }
    arc_mapped[static_cast<std::size_t>(arc)] = 1;
    dag.set_arc_variable(static_cast<ArcId>(arc), static_cast<Var>(v1 - 1));
  }

  VarDefinitions defs;
  for (const DefLine& d : def_lines) {
    check_var(d.var);
    if (kinds[static_cast<std::size_t>(d.var - 1)] != VarKind::Free) {
      throw ParseError(filename, d.line, "def variable must be free");
    }
    std::vector<Lit> lits;
    lits.reserve(d.lits.size());
    for (long sl : d.lits) lits.push_back(to_lit(sl));
    try {
      defs.define(static_cast<Var>(d.var - 1), d.kind, std::move(lits));
    } catch (const Error& e) {
      throw ParseError(filename, d.line, e.what());
    }
  }

  return LcspInstance{std::move(dag), std::move(formula), std::move(defs),
                      {}, {}};
}

LcspInstance parse_lcsp_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return parse_lcsp(in, path);
}

LcspInstance parse_lcsp_string(const std::string& text) {
  std::istringstream in(text);
  return parse_lcsp(in, "<string>");
}

void write_lcsp(std::ostream& out, const LcspInstance& inst) {
  const Dag& dag = inst.dag;
  out << "vertices " << dag.num_vertices() << "\n";
  for (ArcId a = 0; a < dag.num_arcs(); ++a) {
    const Arc& arc = dag.arc(a);
    out << "arc " << a << " " << arc.tail << " " << arc.head << " "
        << cost_to_string(arc.weight) << "\n";
  }
  out << "source " << dag.source() << "\n";
  out << "target " << dag.target() << "\n";
  const CnfFormula& f = inst.formula;
  out << "p cnf " << f.num_vars() << " " << f.num_clauses() << "\n";
  auto signed_of = [](Lit l) {
    long v1 = l.var() + 1;
    return l.is_positive() ? v1 : -v1;
  };
  for (int ci = 0; ci < f.num_clauses(); ++ci) {
    for (Lit l : f.clause(ci).lits) out << signed_of(l) << " ";
    out << "0\n";
  }
  for (Var v = 0; v < f.num_vars(); ++v) {
    if (f.kind(v) != VarKind::Graph) continue;
    ArcId a = dag.variable_arc(v);
    if (a != kNoArc) out << "map " << (v + 1) << " " << a << "\n";
  }
  for (Var v : inst.defs.defined_vars_sorted()) {
    const VarDefinition* d = inst.defs.find(v);
    out << "def " << (v + 1) << " "
        << (d->kind == DefKind::AllOf ? "all" : "any");
    for (Lit l : d->lits) out << " " << signed_of(l);
    out << " 0\n";
  }
}

std::string write_lcsp_string(const LcspInstance& inst) {
  std::ostringstream out;
  write_lcsp(out, inst);
  return out.str();
}

void write_lcsp_file(const std::string& path, const LcspInstance& inst) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path + " for writing");
  write_lcsp(out, inst);
}

}  // namespace lcsp::io
