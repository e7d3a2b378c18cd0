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
#include <utility>
#include <vector>

#include "redspec/limits.hpp"
#include "redspec/permcore/perm_group.hpp"

namespace redspec {

struct MinimalityCheck {
  bool minimal = false;
  bool exact = true;  // false when prime-order elements were sampled
};

// n normal in g and ncl_g(x) = n for every prime-order x in n: all class
// representatives when |g| <= limits.element_enumeration, sampled otherwise.
MinimalityCheck check_minimal_normal(const PermGroup& g, const PermGroup& n,
                                     const Limits& limits = Limits::defaults());

// Nonabelian simple at tested scale: perfect, and no proper nontrivial
// normal subgroup among the minimal normal subgroups found.
bool is_simple_at_scale(const PermGroup& l, const Limits& limits = Limits::defaults());

struct SubdirectDecomposition {
  // Classes of factor indices (0-based), each sorted, ordered by first entry.
  std::vector<std::vector<std::size_t>> partition;
  // k intersected with the factors of each class, same order.
  std::vector<PermGroup> components;
};

// k acts on disjoint invariant point sets factors[0..], projecting onto a
// copy of the nonabelian simple group l on each. PreconditionError when a
// projection is not onto (by order) or l is not simple at tested scale.
SubdirectDecomposition subdirect_decompose(const PermGroup& k,
                                           const std::vector<std::vector<Point>>& factors,
                                           const PermGroup& l,
                                           const Limits& limits = Limits::defaults());

struct GoursatEntry {
  PermGroup subgroup;
  mpz_class order;
  bool split = false;  // N = (N meet a) x (N meet b)
};

struct GoursatReport {
  bool hypothesis_centerless = false;  // every quotient of a has trivial center
  std::vector<GoursatEntry> entries;   // every normal subgroup of a x b, by order
  std::size_t failures = 0;
};

// ResourceError when a x b exceeds limits.element_enumeration.
GoursatReport goursat_split_check(const PermGroup& a, const PermGroup& b,
                                  const Limits& limits = Limits::defaults());

// Center of a group small enough to enumerate.
PermGroup center(const PermGroup& g, const Limits& limits = Limits::defaults());

struct BlockKernelSocle {
  bool kernel_trivial = false;
  PermGroup kernel;        // K, the kernel of the action on blocks
  PermGroup socle;         // soc(K) = K meet soc(U)^J
  PermGroup block_group;   // U on block 0, points relabelled 0..b-1
  PermGroup block_socle;   // soc(U) = L^I on the same points
  std::size_t socle_factors = 0;  // |I|
  // Classes of pairs (i, j): i indexes the simple factors of soc(U_j), j the
  // blocks, both 0-based. soc(K) is the product of diagonals over classes.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> partition;
  MinimalityCheck minimal;  // soc(K) minimal normal in g
};

// PreconditionError unless g is transitive, blocks is a block system and
// the block-stabilizer image is primitive with a unique, nonabelian minimal
// normal subgroup. K = 1 is reported through kernel_trivial.
BlockKernelSocle block_kernel_socle(const PermGroup& g, const std::vector<std::vector<Point>>& blocks,
                                    const Limits& limits = Limits::defaults());

struct DescentWitness {
  PermGroup g1n;  // <g1, n>
  PermGroup g0n;  // <g0, n>
};

// g1 < g0 < g with g0 acting primitively on g0/g1 with a unique nonabelian
// minimal normal subgroup, K = core(g0) != 1 and n minimal normal in g with
// n meet K = 1; each hypothesis failure raises PreconditionError naming it.
// Returns the witness when g1n != g0n and neither of g0, g1n contains the
// other; nullopt otherwise.
std::optional<DescentWitness> descent_refinement(const PermGroup& g, const PermGroup& g0,
                                                 const PermGroup& g1, const PermGroup& n,
                                                 const Limits& limits = Limits::defaults());

}  // namespace redspec
