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

#include "redspec/genus/genus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "redspec/error.hpp"

namespace redspec {

void RamificationType::validate() const {
  for (const auto& p : entries) {
    std::uint64_t sum = 0;
    for (auto e : p) {
      if (e == 0) throw InconsistentDataError("ramification index 0 in " + format_partition(p));
      sum += e;
    }
    if (sum != degree) {
      throw InconsistentDataError("partition " + format_partition(p) + " sums to " +
                                  std::to_string(sum) + ", expected " + std::to_string(degree));
    }
  }
}

std::string RamificationType::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) s += ",";
    s += format_partition(entries[i]);
  }
  return s;
}

std::int64_t perm_index(const Permutation& sigma) {
  return static_cast<std::int64_t>(sigma.degree()) - static_cast<std::int64_t>(sigma.num_cycles());
}

std::int64_t partition_index(const Partition& p) {
  std::int64_t s = 0;
  for (auto e : p) s += static_cast<std::int64_t>(e) - 1;
  return s;
}

std::int64_t genus_from_index_sum(std::int64_t index_sum, std::int64_t degree) {
  if (index_sum % 2 != 0) {
    throw InconsistentDataError("index sum " + std::to_string(index_sum) +
                                " is odd; no cover has this ramification");
  }
  std::int64_t g = index_sum / 2 - degree + 1;
  if (g < 0) {
    throw InconsistentDataError("index sum " + std::to_string(index_sum) +
                                " gives negative genus for degree " + std::to_string(degree));
  }
  return g;
}

std::int64_t ramification_genus(const RamificationType& r) {
  r.validate();
  std::int64_t sum = 0;
  for (const auto& p : r.entries) sum += partition_index(p);
  return genus_from_index_sum(sum, static_cast<std::int64_t>(r.degree));
}

Partition two_set_cycle_type(const Partition& cycle_type) {
  std::map<std::uint64_t, std::uint64_t> mult;
  for (auto a : cycle_type) ++mult[a];
  std::map<std::uint64_t, std::uint64_t> out;  // length -> count
  for (auto it = mult.begin(); it != mult.end(); ++it) {
    const std::uint64_t a = it->first, m = it->second;
    // Pairs inside one cycle.
    if (a % 2 == 1) {
      out[a] += m * ((a - 1) / 2);
    } else {
      out[a] += m * ((a - 2) / 2);
      out[a / 2] += m;
    }
    // Pairs across two cycles of the same length.
    out[a] += m * (m - 1) / 2 * a;
    for (auto jt = std::next(it); jt != mult.end(); ++jt) {
      const std::uint64_t b = jt->first;
      out[std::lcm(a, b)] += m * jt->second * std::gcd(a, b);
    }
  }
  Partition p;
  for (auto it = out.rbegin(); it != out.rend(); ++it)
    if (it->first > 0) p.insert(p.end(), it->second, static_cast<std::uint32_t>(it->first));
  return p;
}

bool siegel_test(const Partition& infinity, std::int64_t genus) {
  return genus == 0 && infinity.size() <= 2;
}

BranchTuple::BranchTuple(std::vector<Permutation> entries, std::size_t degree)
    : degree_(entries.empty() ? degree : entries.front().degree()), entries_(std::move(entries)) {
  if (degree_ == 0) degree_ = 1;
  Permutation prod = Permutation::identity(degree_);
  for (const auto& x : entries_) {
    if (x.degree() != degree_) throw ContractError("tuple entries differ in degree");
    prod *= x;
  }
  if (!prod.is_identity()) {
    throw InconsistentDataError("tuple product is " + prod.to_string() + ", not the identity");
  }
  group_ = PermGroup(degree_, entries_);
  if (!is_transitive(group_)) throw ContractError("tuple generates an intransitive group");
}

RamificationType BranchTuple::ramification_type() const {
  RamificationType r;
  r.degree = degree_;
  for (const auto& x : entries_) r.entries.push_back(x.cycle_type());
  return r;
}

std::int64_t tuple_genus(const BranchTuple& t) {
  std::int64_t sum = 0;
  for (const auto& x : t.entries()) sum += perm_index(x);
  return genus_from_index_sum(sum, static_cast<std::int64_t>(t.degree()));
}

std::vector<Partition> action_cycle_types(const BranchTuple& t, const Action& act) {
  std::vector<Partition> out;
  for (const auto& x : t.entries()) {
    if (!act.source().contains(x))
      throw ContractError("tuple entry " + x.to_string() + " is outside the acting group");
    out.push_back(act(x).cycle_type());
  }
  return out;
}

std::int64_t action_genus(const BranchTuple& t, const Action& act, const Limits& limits) {
  if (act.degree() > limits.product_degree) {
    throw ResourceError("product_degree", limits.product_degree,
                        "action of degree " + std::to_string(act.degree()));
  }
  std::vector<Permutation> images;
  Permutation prod = Permutation::identity(act.degree());
  std::int64_t sum = 0;
  for (const auto& x : t.entries()) {
    if (!act.source().contains(x))
      throw ContractError("tuple entry " + x.to_string() + " is outside the acting group");
    images.push_back(act(x));
    prod *= images.back();
    sum += perm_index(images.back());
  }
  if (!prod.is_identity()) throw ContractError("image tuple does not multiply to the identity");
  if (act.degree() > 1 && orbits(act.degree(), images).size() != 1)
    throw ContractError("image of the tuple is intransitive");
  return genus_from_index_sum(sum, static_cast<std::int64_t>(act.degree()));
}

namespace {

bool accept(const std::vector<Permutation>& tuple, const PermGroup& group, bool generation) {
  PermGroup h(group.degree(), tuple);
  if (!is_transitive(h)) return false;
  return !generation || h.order() == group.order();
}

}  // namespace

Realization realize_tuple(const RamificationType& r, const PermGroup& group,
                          const RealizeOptions& options, const Limits& limits) {
  r.validate();
  if (r.degree != group.degree()) throw ContractError("ramification degree differs from group");
  Realization out;
  const std::size_t s = r.entries.size();
  if (s == 0) {
    if (group.degree() == 1) out.tuple = BranchTuple({}, 1);
    return out;
  }
  std::vector<Partition> types = r.entries;
  for (auto& p : types) canonicalize(p);
  auto finish = [&](std::vector<Permutation>& tuple) -> bool {
    Permutation prod = Permutation::identity(group.degree());
    for (std::size_t i = 0; i + 1 < s; ++i) prod *= tuple[i];
    tuple[s - 1] = prod.inverse();
    if (tuple[s - 1].cycle_type() != types[s - 1]) return false;
    if (!accept(tuple, group, options.require_generation)) return false;
    out.tuple = BranchTuple(tuple);
    return true;
  };
  std::vector<Permutation> tuple(s);
  if (group.order() <= limits.element_enumeration) {
    const StabChain& c = group.chain();
    const std::uint64_t n = group.order_u64();
    std::vector<std::vector<Permutation>> pools(s - 1);
    for (std::uint64_t i = 0; i < n; ++i) {
      Permutation x = c.element_at(i);
      auto ct = x.cycle_type();
      for (std::size_t j = 0; j + 1 < s; ++j)
        if (ct == types[j]) pools[j].push_back(x);
    }
    for (const auto& pool : pools)
      if (pool.empty()) return out;
    std::vector<std::size_t> digit(s - 1, 0);
    while (out.attempts < options.budget) {
      for (std::size_t j = 0; j + 1 < s; ++j) tuple[j] = pools[j][digit[j]];
      ++out.attempts;
      if (finish(tuple)) return out;
      std::size_t j = s - 1;
      while (j > 0) {
        if (++digit[j - 1] < pools[j - 1].size()) break;
        digit[j - 1] = 0;
        --j;
      }
      if (j == 0) break;
    }
    return out;
  }
  std::mt19937_64 rng(options.seed);
  auto draw = [&](const Partition& type, Permutation& x) {
    while (out.attempts < options.budget) {
      ++out.attempts;
      x = group.random_element(rng);
      if (x.cycle_type() == type) return true;
    }
    return false;
  };
  for (;;) {
    for (std::size_t j = 0; j + 1 < s; ++j)
      if (!draw(types[j], tuple[j])) return out;
    if (finish(tuple)) return out;
  }
  return out;
}

}  // namespace redspec
