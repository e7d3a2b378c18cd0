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

#include "redspec/permcore/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "redspec/error.hpp"

namespace redspec {

Partition& canonicalize(Partition& p) {
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

std::uint64_t partition_sum(const Partition& p) {
  return std::accumulate(p.begin(), p.end(), std::uint64_t{0});
}

std::string format_partition(const Partition& p) {
  Partition asc(p);
  std::sort(asc.begin(), asc.end());
  std::string out = "[";
  for (std::size_t i = 0; i < asc.size();) {
    std::size_t j = i;
    while (j < asc.size() && asc[j] == asc[i]) ++j;
    if (i > 0) out += ",";
    out += std::to_string(asc[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + "]";
}

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw InputError("permutation images are not a bijection of {0,...," +
                       std::to_string(images_.size()) + "-1}");
    }
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point a = cycle[i];
      if (a >= degree) {
        throw InputError("cycle point " + std::to_string(a + 1) +
                         " exceeds degree " + std::to_string(degree));
      }
      if (used[a]) {
        throw InputError("point " + std::to_string(a + 1) +
                         " occurs twice in cycle notation");
      }
      used[a] = true;
      p.images_[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return p;
}

Permutation Permutation::from_cycles(
    std::size_t degree, std::initializer_list<std::initializer_list<Point>> cycles) {
  std::vector<std::vector<Point>> v;
  for (const auto& c : cycles) v.emplace_back(c);
  return from_cycles(degree, v);
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation", 1, 1);
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') {
      throw ParseError("expected '('", 1, i + 1);
    }
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) throw ParseError("unterminated cycle", 1, i + 1);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("unexpected '" + std::string(1, text[i]) + "'", 1, i + 1);
      }
      std::uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > degree) break;
        ++i;
      }
      if (v == 0 || v > degree) {
        throw ParseError("point out of range 1.." + std::to_string(degree), 1, i + 1);
      }
      cycle.push_back(static_cast<Point>(v - 1));
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = rhs.images_[images_[i]];
  return r;
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  for (auto& x : images_) x = rhs.images_[x];
  return *this;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(std::int64_t e) const {
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Permutation result(degree());
  while (n > 0) {
    if (n & 1) result *= base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation& x) const {
  // x^-1 p x maps x(i) -> x(p(i)).
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[x.images_[i]] = x.images_[images_[i]];
  return r;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size()) throw ContractError("cannot shrink a permutation");
  Permutation r(degree);
  std::copy(images_.begin(), images_.end(), r.images_.begin());
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  unsigned __int128 acc = 1;
  for (auto len : cycle_type()) {
    acc = acc / std::gcd(static_cast<std::uint64_t>(acc), std::uint64_t{len}) * len;
    if (acc > UINT64_MAX) {
      throw ResourceError("uint64 element order", UINT64_MAX,
                          "element order does not fit in 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::size_t Permutation::num_cycles() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) seen[j] = true;
  }
  return count;
}

Partition Permutation::cycle_type() const {
  Partition type;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint32_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    type.push_back(len);
  }
  return canonicalize(type);
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cycle;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<Point> Permutation::moved_points() const {
  std::vector<Point> out;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) out.push_back(static_cast<Point>(i));
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& c : cs) {
    out += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += " ";
      out += std::to_string(c[i] + 1);
    }
    out += ")";
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace redspec
