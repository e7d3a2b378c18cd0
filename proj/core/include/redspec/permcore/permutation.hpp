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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace redspec {

using Point = std::uint32_t;

// A multiset of positive integers stored in descending order. Used for cycle
// types and for ramification data.
using Partition = std::vector<std::uint32_t>;

// Sorts descending in place and returns the argument.
Partition& canonicalize(Partition& p);
std::uint64_t partition_sum(const Partition& p);
// "[1^3,2]" style, ascending parts with multiplicities.
std::string format_partition(const Partition& p);

// A bijection of {0, ..., n-1}.
//
// Products compose left to right: for p * q the permutation p is applied
// first, i.e. (i)(p * q) = q(p(i)). This is the right-action convention used
// by most permutation group software, and every group algorithm in this
// library is written against it.
class Permutation {
 public:
  Permutation() = default;
  // The identity of degree n.
  explicit Permutation(std::size_t degree);
  // Throws InputError unless images is a bijection of {0, ..., n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  // 0-indexed cycles; points absent from every cycle are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);
  static Permutation from_cycles(
      std::size_t degree, std::initializer_list<std::initializer_list<Point>> cycles);
  // Parses 1-indexed cycle notation such as "(1 2 3)(4 5)" or "()".
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  Point image(Point p) const { return images_[p]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;
  // x^-1 * this * x
  Permutation conjugate_by(const Permutation& x) const;
  // Same action on the first degree() points, fixed beyond.
  Permutation extended(std::size_t degree) const;

  bool is_identity() const;
  std::uint64_t order() const;
  std::size_t num_cycles() const;  // fixed points included
  Partition cycle_type() const;    // fixed points included
  // Nontrivial cycles, each starting at its smallest point, sorted by it.
  std::vector<std::vector<Point>> cycles() const;
  std::vector<Point> moved_points() const;
  // 1-indexed cycle notation; "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// Commutator a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

}  // namespace redspec
