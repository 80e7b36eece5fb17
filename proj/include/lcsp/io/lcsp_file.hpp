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

#ifndef LCSP_IO_LCSP_FILE_HPP
#define LCSP_IO_LCSP_FILE_HPP

#include <iosfwd>
#include <string>

#include "lcsp/solver/instance.hpp"

namespace lcsp::io {

// Text format of a core instance:
//
//   vertices <n>
//   arc <id> <tail> <head> <weight>        (ids dense from 0, ascending)
//   source <v>
//   target <v>
//   p cnf <vars> <clauses>                 (variables 1-based)
//   <signed literals> 0                    (one clause per line)
//   map <var> <arc-id>                     (mapped variables are graph vars)
//   def <var> all|any <signed literals> 0  (definitions of compiled vars)
//
// Lines starting with 'c' are comments. The writer emits the canonical form
// (normalized clauses, ascending ids); parse-then-write is the identity on
// canonical files.
LcspInstance parse_lcsp(std::istream& in, const std::string& filename = "");
LcspInstance parse_lcsp_file(const std::string& path);
LcspInstance parse_lcsp_string(const std::string& text);

void write_lcsp(std::ostream& out, const LcspInstance& inst);
std::string write_lcsp_string(const LcspInstance& inst);
void write_lcsp_file(const std::string& path, const LcspInstance& inst);

}  // namespace lcsp::io

#endif  // LCSP_IO_LCSP_FILE_HPP
