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

#include "redspec/permcore/blocks.hpp"

#include <algorithm>
#include <numeric>

#include "redspec/error.hpp"

namespace redspec {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Point find(Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // Keeps the smaller root so class representatives are stable.
  Point unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return a;
  }
  std::vector<Point> parent;
};

BlockSystem classes_of(UnionFind& uf, std::size_t n) {
  std::vector<std::vector<Point>> by_root(n);
  for (Point p = 0; p < n; ++p) by_root[uf.find(p)].push_back(p);
  BlockSystem out;
  for (auto& b : by_root)
    if (!b.empty()) out.push_back(std::move(b));
  return out;
}

}  // namespace

BlockSystem minimal_block_system(const PermGroup& g, Point a, Point b) {
  const std::size_t n = g.degree();
  if (a >= n || b >= n) throw ContractError("point out of range");
  UnionFind uf(n);
  std::vector<std::pair<Point, Point>> queue;
  if (a != b) {
    uf.unite(a, b);
    queue.emplace_back(a, b);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [x, y] = queue[head];
    for (const auto& s : g.generators()) {
      Point u = uf.find(s(x)), v = uf.find(s(y));
      if (u != v) {
        uf.unite(u, v);
        queue.emplace_back(u, v);
      }
    }
  }
  return classes_of(uf, n);
}

bool refines(const BlockSystem& fine, const BlockSystem& coarse) {
  std::size_t n = 0;
  for (const auto& b : coarse) n += b.size();
  std::vector<std::size_t> owner(n);
  for (std::size_t i = 0; i < coarse.size(); ++i)
    for (Point p : coarse[i]) owner[p] = i;
  for (const auto& b : fine)
    for (Point p : b)
      if (owner[p] != owner[b.front()]) return false;
  return true;
}

std::vector<BlockSystem> block_systems(const PermGroup& g) {
  const std::size_t n = g.degree();
  if (!is_transitive(g)) throw ContractError("block systems need a transitive group");
  std::vector<BlockSystem> found;
  for (Point b = 1; b < n; ++b) {
    BlockSystem sys = minimal_block_system(g, 0, b);
    if (sys.size() == 1) continue;
    if (std::find(found.begin(), found.end(), sys) == found.end()) found.push_back(std::move(sys));
  }
  std::vector<BlockSystem> out;
  for (const auto& sys : found) {
    bool minimal = true;
    for (const auto& other : found)
      if (other != sys && refines(other, sys)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(sys);
  }
  std::sort(out.begin(), out.end(), [](const BlockSystem& x, const BlockSystem& y) {
    if (x.front().size() != y.front().size()) return x.front().size() < y.front().size();
    return x < y;
  });
  return out;
}

bool is_primitive(const PermGroup& g) {
  if (!is_transitive(g)) return false;
  for (Point b = 1; b < g.degree(); ++b)
    if (minimal_block_system(g, 0, b).size() != 1) return false;
  return true;
}

bool is_block_system(const PermGroup& g, const BlockSystem& blocks) {
  std::vector<std::int64_t> owner(g.degree(), -1);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (Point p : blocks[i]) {
      if (p >= g.degree() || owner[p] != -1) return false;
      owner[p] = static_cast<std::int64_t>(i);
    }
  if (std::find(owner.begin(), owner.end(), -1) != owner.end()) return false;
  for (const auto& s : g.generators())
    for (const auto& b : blocks)
      for (Point p : b)
        if (owner[s(p)] != owner[s(b.front())]) return false;
  return true;
}

}  // namespace redspec
