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

#include "redspec/permcore/normal.hpp"

#include <algorithm>
#include <random>

#include "redspec/error.hpp"
#include "redspec/permcore/actions.hpp"

namespace redspec {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> elements) {
  GroupBuilder n(g.degree());
  for (const auto& e : elements) n.add(e);
  for (std::size_t i = 0; i < n.generators().size(); ++i) {
    const Permutation h = n.generators()[i];
    for (const auto& x : g.generators()) n.add(h.conjugate_by(x));
  }
  return n.group();
}

PermGroup normal_closure(const PermGroup& g, const PermGroup& s) {
  for (const auto& x : s.generators())
    if (!g.contains(x)) throw ContractError("s is not a subgroup of g: " + x.to_string());
  return normal_closure(g, std::span<const Permutation>(s.generators()));
}

bool is_normal(const PermGroup& g, const PermGroup& n) {
  for (const auto& h : n.generators())
    for (const auto& x : g.generators())
      if (!n.contains(h.conjugate_by(x))) return false;
  return true;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, std::span<const Permutation>(comms));
}

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  for (;;) {
    PermGroup d = derived_subgroup(series.back());
    if (d.order() == series.back().order()) break;
    series.push_back(std::move(d));
  }
  return series;
}

PermGroup perfect_core(const PermGroup& g) { return derived_series(g).back(); }

bool is_solvable(const PermGroup& g) { return perfect_core(g).is_trivial(); }

bool is_perfect(const PermGroup& g) { return derived_subgroup(g).order() == g.order(); }

PermGroup core(const PermGroup& g, const PermGroup& s, const Limits& limits) {
  return coset_action(g, s, limits).kernel();
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g, const Limits& limits) {
  const mpz_class order = g.order();
  if (order > limits.element_enumeration) {
    throw ResourceError("element_enumeration", limits.element_enumeration,
                        "class enumeration of a group of order " + order.get_str());
  }
  const std::uint64_t size = order.get_ui();
  const StabChain& c = g.chain();
  std::vector<bool> seen(size, false);
  std::vector<ConjugacyClass> out;
  std::vector<Permutation> frontier;
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    if (seen[idx]) continue;
    seen[idx] = true;
    Permutation rep = c.element_at(idx);
    std::uint64_t count = 1;
    frontier.assign(1, rep);
    while (!frontier.empty()) {
      Permutation y = std::move(frontier.back());
      frontier.pop_back();
      for (const auto& x : g.generators()) {
        Permutation z = y.conjugate_by(x);
        std::uint64_t j = c.index_of(z);
        if (!seen[j]) {
          seen[j] = true;
          ++count;
          frontier.push_back(std::move(z));
        }
      }
    }
    std::uint64_t ord = rep.order();
    out.push_back({std::move(rep), ord, count});
  }
  return out;
}

namespace {

bool group_less(const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.reduced_generators() < b.reduced_generators();
}

// Keeps the candidates with no strictly smaller candidate inside them.
std::vector<PermGroup> minimal_among(std::vector<PermGroup> cands) {
  std::sort(cands.begin(), cands.end(),
            [](const PermGroup& a, const PermGroup& b) { return a.order() < b.order(); });
  std::vector<PermGroup> kept;
  for (auto& n : cands) {
    bool minimal = true;
    for (const auto& m : kept)
      if (n.contains(m)) {
        minimal = false;
        break;
      }
    if (minimal) kept.push_back(std::move(n));
  }
  return kept;
}

void add_candidate(std::vector<PermGroup>& cands, PermGroup n) {
  if (n.is_trivial()) return;
  for (const auto& m : cands)
    if (m == n) return;
  cands.push_back(std::move(n));
}

}  // namespace

MinimalNormalSubgroups minimal_normal_subgroups(const PermGroup& g, double order_cap,
                                                const Limits& limits, std::string_view cap_name) {
  const mpz_class order = g.order();
  if (order > order_cap) {
    throw ResourceError(std::string(cap_name), static_cast<std::uint64_t>(order_cap),
                        "minimal normal subgroups of a group of order " + order.get_str());
  }
  MinimalNormalSubgroups out;
  out.socle = PermGroup::trivial(g.degree());
  if (g.is_trivial()) {
    out.exhaustive = true;
    return out;
  }
  std::vector<PermGroup> cands;
  if (order <= limits.element_enumeration) {
    out.exhaustive = true;
    for (const auto& cls : conjugacy_classes(g, limits)) {
      if (cls.element_order < 2 || prime_divisors(cls.element_order).size() != 1 ||
          prime_divisors(cls.element_order)[0] != cls.element_order)
        continue;
      const Permutation one[] = {cls.representative};
      add_candidate(cands, normal_closure(g, one));
    }
    out.subgroups = minimal_among(std::move(cands));
  } else {
    std::mt19937_64 rng(0x6d696e6e6f726dull);
    auto prime_powers = [](const Permutation& x) {
      std::vector<Permutation> res;
      std::uint64_t ord = x.order();
      for (std::uint64_t p : prime_divisors(ord))
        res.push_back(x.pow(static_cast<std::int64_t>(ord / p)));
      return res;
    };
    for (std::uint32_t s = 0; s < limits.normal_samples; ++s)
      for (const auto& y : prime_powers(g.random_element(rng))) {
        const Permutation one[] = {y};
        add_candidate(cands, normal_closure(g, one));
      }
    // Push each survivor down with elements sampled from inside it until no
    // sample generates a smaller normal subgroup.
    for (bool changed = true; changed;) {
      changed = false;
      auto kept = minimal_among(cands);
      for (const auto& n : kept)
        for (std::uint32_t s = 0; s < 8; ++s)
          for (const auto& y : prime_powers(n.random_element(rng))) {
            const Permutation one[] = {y};
            PermGroup m = normal_closure(g, one);
            if (m.order() < n.order()) {
              std::size_t before = cands.size();
              add_candidate(cands, std::move(m));
              changed = changed || cands.size() != before;
            }
          }
      if (!changed) out.subgroups = std::move(kept);
    }
  }
  std::sort(out.subgroups.begin(), out.subgroups.end(), group_less);
  for (const auto& n : out.subgroups) out.socle = join(out.socle, n);
  out.socle = PermGroup(g.degree(), out.socle.reduced_generators());
  return out;
}

MinimalNormalSubgroups socle(const PermGroup& g, const Limits& limits) {
  return minimal_normal_subgroups(g, static_cast<double>(limits.small_group), limits, "small_group");
}

std::vector<PermGroup> normal_subgroups(const PermGroup& g, const Limits& limits) {
  std::vector<PermGroup> closures;
  for (const auto& cls : conjugacy_classes(g, limits)) {
    const Permutation one[] = {cls.representative};
    add_candidate(closures, normal_closure(g, one));
  }
  std::vector<PermGroup> all{PermGroup::trivial(g.degree())};
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& c : closures) {
      if (all[i].contains(c)) continue;
      PermGroup j = join(all[i], c);
      bool fresh = true;
      for (const auto& m : all)
        if (m == j) {
          fresh = false;
          break;
        }
      if (fresh) all.push_back(PermGroup(g.degree(), j.reduced_generators()));
    }
  std::sort(all.begin(), all.end(), group_less);
  return all;
}

std::optional<bool> are_conjugate(const PermGroup& g, const PermGroup& a, const PermGroup& b,
                                  const Limits& limits) {
  if (a.order() != b.order()) return false;
  if (g.order() / a.order() > limits.conjugacy_test_index) return std::nullopt;
  for (const auto& x : right_coset_representatives(g, a, limits)) {
    bool inside = true;
    for (const auto& h : a.generators())
      if (!b.contains(h.conjugate_by(x))) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

}  // namespace redspec
