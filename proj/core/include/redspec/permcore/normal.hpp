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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "redspec/limits.hpp"
#include "redspec/permcore/perm_group.hpp"

namespace redspec {

// Smallest normal subgroup of g containing s. ContractError if s is not a
// subgroup of g.
PermGroup normal_closure(const PermGroup& g, const PermGroup& s);
PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> elements);
bool is_normal(const PermGroup& g, const PermGroup& n);

PermGroup derived_subgroup(const PermGroup& g);
// g, g', g'', ... ending at the first repeated term.
std::vector<PermGroup> derived_series(const PermGroup& g);
// Last term of the derived series.
PermGroup perfect_core(const PermGroup& g);
bool is_solvable(const PermGroup& g);
bool is_perfect(const PermGroup& g);

// Intersection of all conjugates of s, as the kernel of the coset action.
PermGroup core(const PermGroup& g, const PermGroup& s,
               const Limits& limits = Limits::defaults());

struct ConjugacyClass {
  Permutation representative;  // element of least chain index in the class
  std::uint64_t element_order;
  std::uint64_t size;
};

// Exhaustive class enumeration. ResourceError above limits.element_enumeration.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g,
                                              const Limits& limits = Limits::defaults());

struct MinimalNormalSubgroups {
  std::vector<PermGroup> subgroups;  // sorted by order, then generators
  PermGroup socle;                   // their product
  // True when the candidates were normal closures of every class
  // representative of prime order; false when sampled.
  bool exhaustive = false;
};

// Minimal normal subgroups below an explicit order cap. Uses class
// representatives when the group is under limits.element_enumeration and a
// deterministic sample of prime-order elements otherwise. A breach of
// order_cap is reported under cap_name.
MinimalNormalSubgroups minimal_normal_subgroups(const PermGroup& g, double order_cap,
                                                const Limits& limits = Limits::defaults(),
                                                std::string_view cap_name = "structure_order");
// The socle operation proper, capped at limits.small_group.
MinimalNormalSubgroups socle(const PermGroup& g, const Limits& limits = Limits::defaults());

// Every normal subgroup, as joins of normal closures of class
// representatives. Sorted by order. Needs conjugacy classes.
std::vector<PermGroup> normal_subgroups(const PermGroup& g,
                                        const Limits& limits = Limits::defaults());

// Brute force over right coset representatives of a. nullopt when
// [g:a] > limits.conjugacy_test_index.
std::optional<bool> are_conjugate(const PermGroup& g, const PermGroup& a, const PermGroup& b,
                                  const Limits& limits = Limits::defaults());

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace redspec
