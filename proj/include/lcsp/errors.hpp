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

#ifndef LCSP_ERRORS_HPP
#define LCSP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lcsp {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class CycleError : public Error {
 public:
  explicit CycleError(const std::string& msg) : Error(msg) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& file, int line, const std::string& msg)
      : Error((file.empty() ? std::string("input") : file) + ":" +
              std::to_string(line) + ": " + msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

class TooLargeError : public Error {
 public:
  explicit TooLargeError(const std::string& msg) : Error(msg) {}
};

class UnknownAirportError : public Error {
 public:
  explicit UnknownAirportError(const std::string& msg) : Error(msg) {}
};

class EmptySearchSpaceError : public Error {
 public:
  explicit EmptySearchSpaceError(const std::string& msg) : Error(msg) {}
};

}  // namespace lcsp

#endif  // LCSP_ERRORS_HPP
