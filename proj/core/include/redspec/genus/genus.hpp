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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "redspec/limits.hpp"
#include "redspec/permcore/actions.hpp"
#include "redspec/permcore/perm_group.hpp"

namespace redspec {

// One partition of the degree per branch point, each stored descending.
struct RamificationType {
  std::size_t degree = 0;
  std::vector<Partition> entries;
  std::string family;  // e.g. "table1 row 3, l=22"; empty if none

  // InconsistentDataError if an entry has a zero part or wrong sum.
  void validate() const;
  std::string to_string() const;
};

// degree - number of cycles (fixed points count as cycles).
std::int64_t perm_index(const Permutation& sigma);
// Sum of (e - 1) over the parts.
std::int64_t partition_index(const Partition& p);
// g with index_sum = 2(n + g - 1). InconsistentDataError if the sum is odd or
// g would be negative.
std::int64_t genus_from_index_sum(std::int64_t index_sum, std::int64_t degree);
std::int64_t ramification_genus(const RamificationType& r);

// Cycle type of the induced permutation on unordered pairs, from the cycle
// type alone. Total is n(n-1)/2.
Partition two_set_cycle_type(const Partition& cycle_type);

// Genus zero and at most two points over infinity.
bool siegel_test(const Partition& infinity, std::int64_t genus);

// Permutations of a common degree whose product (left to right) is the
// identity and which generate a transitive group.
class BranchTuple {
 public:
  // InconsistentDataError if the product is not the identity, ContractError
  // if the generated group is intransitive or degrees differ.
  explicit BranchTuple(std::vector<Permutation> entries, std::size_t degree = 0);

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Permutation>& entries() const { return entries_; }
  const Permutation& operator[](std::size_t i) const { return entries_[i]; }
  const PermGroup& group() const { return group_; }
  RamificationType ramification_type() const;

 private:
  std::size_t degree_;
  std::vector<Permutation> entries_;
  PermGroup group_;
};

std::int64_t tuple_genus(const BranchTuple& t);

// Genus of the image tuple under an action of a group containing the
// tuple. ContractError if an entry lies outside act.source() or the image is
// intransitive; ResourceError if act.degree() > limits.product_degree.
std::int64_t action_genus(const BranchTuple& t, const Action& act,
                          const Limits& limits = Limits::defaults());
// Cycle types of the image entries under the action.
std::vector<Partition> action_cycle_types(const BranchTuple& t, const Action& act);

struct RealizeOptions {
  std::uint64_t budget = 1'000'000;  // candidate tuples examined
  std::uint64_t seed = 1;
  bool require_generation = true;  // tuple must generate the whole group
};

struct Realization {
  std::optional<BranchTuple> tuple;  // empty means "unrealized", not "impossible"
  std::uint64_t attempts = 0;
};

// Bounded search for a product-one tuple in the group with the given cycle
// types. Exhaustive in element order when the group is within
// limits.element_enumeration, seeded random sampling otherwise.
Realization realize_tuple(const RamificationType& r, const PermGroup& group,
                          const RealizeOptions& options = {},
                          const Limits& limits = Limits::defaults());

}  // namespace redspec
