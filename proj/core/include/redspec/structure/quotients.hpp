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

#include <gmpxx.h>

#include <string>
#include <vector>

#include "redspec/limits.hpp"
#include "redspec/permcore/perm_group.hpp"

namespace redspec {

// Names of the nonabelian simple groups of a given order, from a table of
// alternating groups, PSL(2,q) and the remaining small orders. Empty when
// the order is not in the table.
std::vector<std::string> simple_group_names(const mpz_class& order);

struct QuotientCheck {
  bool value = false;
  // False when the verdict is "true" but rests on sampled minimal normal
  // subgroups. A "false" verdict is always exact.
  bool exact = true;
};

// True when g/N is solvable for every normal N != 1. Decided by comparing
// the perfect core with each minimal normal subgroup.
QuotientCheck check_no_nonsolvable_proper_quotient(const PermGroup& g,
                                                   const Limits& limits = Limits::defaults());
bool no_nonsolvable_proper_quotient(const PermGroup& g, const Limits& limits = Limits::defaults());

struct SimpleFactor {
  mpz_class order;
  std::string name;  // table name, or "order N"
  bool identified = false;

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

// Nonabelian composition factors with multiplicity, sorted by order then
// name. Peels a minimal normal subgroup T^k off the perfect core and
// recurses on the quotient, realized as a coset action.
std::vector<SimpleFactor> nonabelian_composition_factors(const PermGroup& g,
                                                         const Limits& limits = Limits::defaults());

// Multiset inclusion of factor lists.
bool factors_contained(const std::vector<SimpleFactor>& sub,
                       const std::vector<SimpleFactor>& super);

}  // namespace redspec
