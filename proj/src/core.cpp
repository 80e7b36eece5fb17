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

#include "lcsp/core.hpp"

#include <cmath>
#include <cstdlib>

#include "lcsp/errors.hpp"

namespace lcsp {

Cost units_to_cost(double units) {
  return static_cast<Cost>(std::llround(units * static_cast<double>(kCostScale)));
}

std::string cost_to_string(Cost c) {
  Cost whole = c / kCostScale;
  Cost frac = c % kCostScale;
  std::string out = std::to_string(whole);
  if (frac != 0) {
    if (frac < 0) frac = -frac;
    std::string digits = std::to_string(frac);
    digits.insert(digits.begin(), 9 - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

Cost cost_from_string(const std::string& text) {
  if (text.empty()) throw Error("empty weight");
  std::size_t dot = text.find('.');
  std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  if (frac.size() > 9) throw Error("weight has more than 9 fractional digits: " + text);
  bool negative = !whole.empty() && whole[0] == '-';
  if (negative) whole = whole.substr(1);
  if (whole.empty() && frac.empty()) throw Error("malformed weight: " + text);
  for (char ch : whole)
    if (ch < '0' || ch > '9') throw Error("malformed weight: " + text);
  for (char ch : frac)
    if (ch < '0' || ch > '9') throw Error("malformed weight: " + text);
  Cost value = 0;
  for (char ch : whole) value = value * 10 + (ch - '0');
  value *= kCostScale;
  Cost scale = kCostScale;
  for (char ch : frac) {
    scale /= 10;
    value += (ch - '0') * scale;
  }
  return negative ? -value : value;
}

}  // namespace lcsp
