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

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "redspec/limits.hpp"
#include "redspec/permcore/permutation.hpp"

namespace redspec {

// Base and strong generating set built by the deterministic Schreier-Sims
// algorithm. Base points are taken as the smallest moved points, after an
// optional caller-supplied prefix, so the chain is reproducible run to run.
//
// Transversals are stored explicitly for small orbits and as Schreier trees
// once orbit * degree grows past a fixed budget.
class StabChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;  // fix every earlier base point
    std::vector<Point> orbit;             // orbit of base, BFS order
    std::vector<std::int32_t> position;   // point -> index in orbit, or -1
    std::vector<std::int32_t> label;      // Schreier tree edge labels
    std::vector<Point> parent;            // Schreier tree parents
    std::vector<Permutation> transversal;      // empty in tree mode
    std::vector<Permutation> transversal_inv;  // empty in tree mode
  };

  struct Sift {
    Permutation residue;
    std::size_t level;  // depth() when every level sifted through
  };

  StabChain(std::size_t degree, std::span<const Permutation> generators,
            std::span<const Point> base_prefix = {},
            const Limits& limits = Limits::defaults());

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_[i]; }
  std::vector<Point> base() const;
  mpz_class order() const;

  Sift sift(Permutation g, std::size_t from = 0) const;
  bool contains(const Permutation& g) const;
  // u with base^u = p at the given level.
  Permutation transversal(std::size_t level, Point p) const;
  Permutation transversal_inverse(std::size_t level, Point p) const;
  // Generators of the stabilizer of the first `level` base points.
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;
  std::vector<Permutation> strong_generators() const { return stabilizer_generators(0); }

  // Bijection between group elements and [0, order) via transversal digits.
  // Requires order < 2^63.
  std::uint64_t index_of(const Permutation& g) const;
  Permutation element_at(std::uint64_t index) const;
  Permutation random_element(std::mt19937_64& rng) const;

 private:
  void build(std::vector<Permutation> gens, std::vector<Point> prefix);
  void rebuild_level(std::size_t i);
  void append_level(Point base);

  std::size_t degree_;
  std::vector<Level> levels_;
  Limits limits_;
  std::uint64_t stored_entries_ = 0;
};

// A finitely generated permutation group of fixed degree. The stabilizer
// chain is built lazily on first use and shared between copies; a finished
// group is safe to read from several threads.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }
  static PermGroup symmetric(std::size_t degree);
  static PermGroup alternating(std::size_t degree);
  static PermGroup cyclic(std::size_t degree);
  static PermGroup dihedral(std::size_t degree);  // order 2 * degree

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const StabChain& chain() const;

  mpz_class order() const { return chain().order(); }
  // Throws ResourceError if the order does not fit in 63 bits.
  std::uint64_t order_u64() const;
  bool contains(const Permutation& g) const { return chain().contains(g); }
  bool contains(const PermGroup& sub) const;
  bool is_trivial() const;
  bool is_abelian() const;
  Permutation random_element(std::mt19937_64& rng) const {
    return chain().random_element(rng);
  }
  // All elements; ResourceError above limits.element_enumeration.
  std::vector<Permutation> elements(const Limits& limits = Limits::defaults()) const;
  // Generators sorted lexicographically, keeping only those that enlarge the
  // group generated so far. Deterministic for a given subgroup.
  std::vector<Permutation> reduced_generators() const;

  // Equality as subgroups of Sym(degree).
  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  struct Cache;
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

// Validates that every generator lies in parent; ContractError otherwise.
PermGroup make_subgroup(const PermGroup& parent, std::vector<Permutation> generators);
// Subgroup generated by the union of generator sets (same degree).
PermGroup join(const PermGroup& a, const PermGroup& b);
// x acting on points offset .. offset+x.degree()-1 of Sym(degree).
Permutation shifted(const Permutation& x, std::size_t offset, std::size_t degree);
// a x b on a.degree() + b.degree() points, a on the first block.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);
// Pointwise stabilizer of a point sequence.
PermGroup pointwise_stabilizer(const PermGroup& g, std::span<const Point> points);

std::vector<Point> orbit(const PermGroup& g, Point p);
// Orbits sorted by smallest point, each sorted ascending.
std::vector<std::vector<Point>> orbits(const PermGroup& g);
std::vector<std::vector<Point>> orbits(std::size_t degree,
                                       std::span<const Permutation> generators);
bool is_transitive(const PermGroup& g);

}  // namespace redspec
