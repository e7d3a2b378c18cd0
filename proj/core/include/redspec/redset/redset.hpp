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
#include <string>
#include <vector>

#include "redspec/genus/genus.hpp"
#include "redspec/limits.hpp"
#include "redspec/permcore/perm_group.hpp"

namespace redspec {

// Arithmetic group a with normal geometric subgroup g generated by the
// branch tuple.
class MonodromyPair {
 public:
  // ContractError unless g is normal in a and the tuple entries generate g.
  MonodromyPair(PermGroup a, PermGroup g, BranchTuple tuple,
                std::optional<std::size_t> infinity = std::nullopt);
  // a = g = the group generated by the tuple.
  static MonodromyPair geometric(BranchTuple tuple, std::optional<std::size_t> infinity = std::nullopt);

  const PermGroup& a() const { return a_; }
  const PermGroup& g() const { return g_; }
  const BranchTuple& tuple() const { return tuple_; }
  std::optional<std::size_t> infinity() const { return infinity_; }
  bool quotient_solvable() const { return quotient_solvable_; }  // a/g

 private:
  PermGroup a_, g_;
  BranchTuple tuple_;
  std::optional<std::size_t> infinity_;
  bool quotient_solvable_ = true;
};

struct MaximalIntransitive {
  std::vector<PermGroup> classes;  // one per conjugacy class, by order descending
  // False when some pair could not be tested for conjugacy within
  // limits.conjugacy_test_index; classes may then repeat.
  bool dedup_complete = true;
};

// Set stabilizers of orbit representatives of k-subsets, 1 <= k <= n/2,
// kept when no union of their orbits has a strictly larger stabilizer.
// ContractError when a is intransitive, ResourceError above
// limits.intransitive_degree.
MaximalIntransitive maximal_intransitive(const PermGroup& a, const Limits& limits = Limits::defaults());

struct Candidate {
  PermGroup d;
  std::uint64_t index = 0;  // [A:D], the cover degree
  bool dg_eq_a = false;
  bool maximal_intransitive = true;
  std::optional<std::int64_t> genus;          // when DG = A
  std::optional<std::int64_t> companion_genus;  // from G on G/(D meet G)
  std::vector<Partition> cycle_types;         // tuple images on A/D
  std::optional<bool> siegel;                 // needs a designated infinity
  std::string reason;                         // why excluded, empty otherwise
};

struct RedSetReport {
  std::size_t degree = 0;
  std::vector<Candidate> candidates;  // DG = A, genus <= 1, not a point stabilizer
  std::vector<Candidate> excluded;
  std::vector<std::string> notes;
};

RedSetReport red_candidates(const MonodromyPair& m, const Limits& limits = Limits::defaults());

// Classes of S_k wr S_5 in product action selected by element and top order:
// order 2 over top order 2, 4 over 4, 5 over 5.
struct WreathScanClass {
  std::string label;
  std::uint64_t index = 0;  // k^5 minus cycles of the product-action representative
  mpz_class size;
};

struct WreathScanTriple {
  std::size_t c2 = 0, c4 = 0, c5 = 0;  // positions in the class lists
  std::uint64_t sum = 0;
  std::int64_t genus = 0;
};

struct WreathScanResult {
  unsigned k = 0;
  std::vector<WreathScanClass> order2, order4, order5;
  std::uint64_t triples = 0;
  std::vector<WreathScanTriple> flagged;  // genus 0 or 1, sorted by (c2, c4, c5)
};

// InputError unless 2 <= k <= 10.
WreathScanResult wreath_scan(unsigned k, unsigned threads = 1, const Limits& limits = Limits::defaults());

struct DirectFactorEntry {
  PermGroup n;
  mpz_class quotient_by_n;      // |a/N|
  mpz_class quotient_by_k;      // |a/K|
  mpz_class embedding_order;    // order of the image of a in a/N x a/K
  bool verified = false;        // embedding_order = |a| and |a| divides the product
};

struct DirectFactorReport {
  bool kernel_trivial = false;
  PermGroup kernel;
  std::vector<DirectFactorEntry> entries;  // minimal normal N with N meet K = 1
  bool splitting = false;                  // some entry verified
  bool exhaustive = true;                  // minimal normal subgroups complete
};

// K is the kernel of the action of a on the given block system.
DirectFactorReport direct_factor_test(const PermGroup& a, const std::vector<std::vector<Point>>& blocks,
                                      const Limits& limits = Limits::defaults());
// K given directly; it must be normal in a.
DirectFactorReport direct_factor_test(const PermGroup& a, const PermGroup& k,
                                      const Limits& limits = Limits::defaults());

// core(a, d1) = core(a, d2).
bool galois_closure_match(const PermGroup& a, const PermGroup& d1, const PermGroup& d2,
                          const Limits& limits = Limits::defaults());

}  // namespace redspec
