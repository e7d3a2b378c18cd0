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

#include "redspec/genus/table1.hpp"

#include <array>
#include <numeric>

#include "redspec/error.hpp"
#include "redspec/genus/ramification_dsl.hpp"

namespace redspec {

namespace {

const std::array<std::string, kTable1Rows> kPatterns = {
    "[l],[a,l-a],[1^{l-2},2]",
    "[l],[1^3,2^{(l-3)/2}],[1,2^{(l-1)/2}],[1^{l-2},2]",
    "[l],[1^2,2^{(l-2)/2}],[1^2,2^{(l-2)/2}],[1^{l-2},2]",
    "[l],[1^3,2^{(l-3)/2}],[2^{(l-3)/2},3]",
    "[l],[1^2,2^{(l-2)/2}],[1,2^{(l-4)/2},3]",
    "[l],[1,2^{(l-1)/2}],[1^2,2^{(l-5)/2},3]",
    "[l],[1^3,2^{(l-3)/2}],[1,2^{(l-5)/2},4]",
    "[l],[1^2,2^{(l-2)/2}],[1^2,2^{(l-6)/2},4]",
    "[l],[1,2^{(l-1)/2}],[1^3,2^{(l-7)/2},4]",
};

void check_row(int row) {
  if (row < 1 || row > kTable1Rows)
    throw InputError("row must be between 1 and " + std::to_string(kTable1Rows));
}

}  // namespace

const std::string& table1_pattern(int row) {
  check_row(row);
  return kPatterns[row - 1];
}

Table1Report table1_verify(int row, long l, long a) {
  check_row(row);
  if (l <= 20) throw InputError("condition l > 20 fails: l = " + std::to_string(l));
  if (row == 1) {
    if (a < 1 || a > l - 1) {
      throw InputError("condition 1 <= a <= l-1 fails: a = " + std::to_string(a));
    }
    if (a % 2 == 0) throw InputError("condition 'a odd' fails: a = " + std::to_string(a));
    if (std::gcd(a, l) != 1) {
      throw InputError("condition gcd(a, l) = 1 fails: gcd(" + std::to_string(a) + ", " +
                       std::to_string(l) + ") = " + std::to_string(std::gcd(a, l)));
    }
  }
  Table1Report rep;
  rep.row = row;
  rep.l = l;
  rep.a = row == 1 ? a : 0;
  Bindings b{{"l", l}};
  if (row == 1) b["a"] = a;
  try {
    rep.natural = parse_ramification(kPatterns[row - 1], b);
  } catch (const InputError& e) {
    throw InputError("integrality condition fails for row " + std::to_string(row) +
                     " at l = " + std::to_string(l) + ": " + e.what());
  }
  rep.natural.family = "table1 row " + std::to_string(row) + ", l=" + std::to_string(l) +
                       (row == 1 ? ", a=" + std::to_string(a) : "");
  rep.two_set.degree = static_cast<std::size_t>(l * (l - 1) / 2);
  rep.two_set.family = rep.natural.family + ", two-set action";
  for (const auto& p : rep.natural.entries) rep.two_set.entries.push_back(two_set_cycle_type(p));
  rep.natural_genus = ramification_genus(rep.natural);
  rep.two_set_genus = ramification_genus(rep.two_set);
  rep.admissible = rep.natural_genus == 0 && rep.two_set_genus == 0;
  return rep;
}

std::vector<std::pair<long, long>> table1_parameters(int row, long lo, long hi) {
  check_row(row);
  std::vector<std::pair<long, long>> out;
  for (long l = std::max(lo + 1, 21L); l <= hi; ++l) {
    if (row == 1) {
      for (long a = 1; a < l; a += 2)
        if (std::gcd(a, l) == 1) out.emplace_back(l, a);
      continue;
    }
    try {
      parse_ramification(kPatterns[row - 1], {{"l", l}});
      out.emplace_back(l, 0);
    } catch (const InputError&) {
    }
  }
  return out;
}

}  // namespace redspec
