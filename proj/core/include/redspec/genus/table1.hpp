// Copyright 2026 The redspec Authors.
//
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

#pragma once

#include <string>
#include <vector>

#include "redspec/genus/genus.hpp"

namespace redspec {

inline constexpr int kTable1Rows = 9;

// Ramification pattern of a row in the expression language of
// parse_ramification, parameters l and (row 1 only) a. The [l] entry is the
// fiber over infinity.
const std::string& table1_pattern(int row);

struct Table1Report {
  int row = 0;
  long l = 0;
  long a = 0;  // row 1 only
  RamificationType natural;
  RamificationType two_set;
  std::int64_t natural_genus = 0;
  std::int64_t two_set_genus = 0;
  // Natural genus 0 and two-set genus 0, the shape the table asserts.
  bool admissible = false;
};

// InputError naming the failed condition when l <= 20, an exponent is not
// integral, or (row 1) a is not odd, not in [1, l-1], or not coprime to l.
Table1Report table1_verify(int row, long l, long a = 0);

// Every admissible (l, a) for the row with lo < l <= hi; a is 0 for rows 2-9.
std::vector<std::pair<long, long>> table1_parameters(int row, long lo, long hi);

}  // namespace redspec
