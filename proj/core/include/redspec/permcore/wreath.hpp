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

#include <functional>
#include <string>
#include <vector>

#include "redspec/limits.hpp"
#include "redspec/permcore/perm_group.hpp"

namespace redspec {

enum class WreathKind { kImprimitive, kProduct };

// An element (b_0, ..., b_{m-1}; pi) of U wr S_m. In the imprimitive action
// it sends (j, x) to (pi(j), b_j(x)); point (j, x) is j * k + x. In the
// product action it sends the tuple x to y with y_{pi(j)} = b_j(x_j); tuple
// x is the point sum_j x_j * k^j.
struct WreathElement {
  std::vector<Permutation> base;
  Permutation top;
};

Permutation imprimitive_permutation(const WreathElement& w);
Permutation product_permutation(const WreathElement& w, const Limits& limits = Limits::defaults());
// Inverse of imprimitive_permutation for a permutation preserving the
// blocks {jk, ..., jk+k-1}. ContractError otherwise.
WreathElement split_imprimitive(const Permutation& x, std::size_t k);

// U wr V with V acting on m points. Product kind requires k^m within
// limits.product_degree.
PermGroup wreath_product(const PermGroup& u, const PermGroup& v, WreathKind kind,
                         const Limits& limits = Limits::defaults());

// A conjugacy class of S_k wr S_m: the top cycle type together with the
// S_k class of the cycle product along each top cycle.
struct WreathClass {
  Partition top;  // descending
  // (cycle length, cycle-product class), sorted by length descending then
  // by class; one entry per top cycle.
  std::vector<std::pair<std::uint32_t, Partition>> cycles;
  std::uint64_t element_order = 1;
  std::uint64_t top_order = 1;
  mpz_class size;

  std::string label() const;
};

// Combinatorial description of S_k wr S_m.
class SymWreathSym {
 public:
  SymWreathSym(std::size_t k, std::size_t m);

  std::size_t k() const { return k_; }
  std::size_t m() const { return m_; }
  mpz_class order() const;
  PermGroup imprimitive_group() const;
  PermGroup product_group(const Limits& limits = Limits::defaults()) const;

  // Visits, in a fixed order, every class whose top cycle type passes the
  // filter.
  void for_each_class(const std::function<bool(const Partition&)>& top_filter,
                      const std::function<void(const WreathClass&)>& visit) const;
  // Every class. ResourceError when the count exceeds element_enumeration.
  std::vector<WreathClass> classes(const Limits& limits = Limits::defaults()) const;
  // Top permutation with consecutive cycles in class order; base entry at the
  // first point of each top cycle carries the cycle product.
  WreathElement representative(const WreathClass& c) const;

 private:
  std::size_t k_, m_;
  std::vector<Partition> k_partitions_;
};

std::vector<Partition> partitions_of(std::uint32_t n);
// Permutation with the given cycle type on consecutive points.
Permutation standard_permutation(std::size_t degree, const Partition& type);
// Order of the centralizer in S_n of an element of the given type.
mpz_class centralizer_order(const Partition& type);

}  // namespace redspec
