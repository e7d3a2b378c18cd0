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

#include "redspec/structure/quotients.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "redspec/error.hpp"
#include "redspec/permcore/actions.hpp"
#include "redspec/permcore/normal.hpp"

namespace redspec {

namespace {

mpz_class ipow(const mpz_class& b, unsigned e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

bool is_prime_power(unsigned q) {
  if (q < 2) return false;
  unsigned p = 2;
  while (q % p != 0) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

// |PSL(n,q)|, |PSU(n,q)|.
mpz_class psl_order(unsigned n, unsigned q) {
  mpz_class r = ipow(q, n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i) r *= ipow(q, i) - 1;
  return r / std::gcd(n, q - 1);
}
mpz_class psu_order(unsigned n, unsigned q) {
  mpz_class r = ipow(q, n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i) r *= ipow(q, i) - (i % 2 == 0 ? 1 : -1);
  return r / std::gcd(n, q + 1);
}
mpz_class psp4_order(unsigned q) {
  return ipow(q, 4) * (ipow(q, 4) - 1) * (ipow(q, 2) - 1) / std::gcd(2u, q - 1);
}

using Table = std::map<mpz_class, std::vector<std::string>>;

Table build_table() {
  Table t;
  auto add = [&t](const mpz_class& order, const std::string& name) {
    auto& names = t[order];
    if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
  };
  mpz_class fact = 24;
  for (unsigned n = 5; n <= 24; ++n) {
    fact *= n;
    add(fact / 2, "A" + std::to_string(n));
  }
  for (unsigned q = 7; q <= 1024; ++q) {
    if (!is_prime_power(q) || q == 9) continue;
    add(psl_order(2, q), "L2(" + std::to_string(q) + ")");
  }
  for (unsigned q : {3u, 4u, 5u, 7u, 8u, 9u, 11u}) add(psl_order(3, q), "L3(" + std::to_string(q) + ")");
  for (unsigned q : {3u, 4u, 5u, 7u, 8u, 9u}) add(psu_order(3, q), "U3(" + std::to_string(q) + ")");
  add(psl_order(4, 3), "L4(3)");
  add(psl_order(5, 2), "L5(2)");
  add(psu_order(4, 2), "U4(2)");
  add(psu_order(4, 3), "U4(3)");
  for (unsigned q : {4u, 5u, 7u}) add(psp4_order(q), "S4(" + std::to_string(q) + ")");
  add(29120, "Sz(8)");
  add(32537600, "Sz(32)");
  add(4245696, "G2(3)");
  add(7920, "M11");
  add(95040, "M12");
  add(175560, "J1");
  add(443520, "M22");
  add(604800, "J2");
  add(10200960, "M23");
  add(44352000, "HS");
  add(50232960, "J3");
  add(244823040, "M24");
  return t;
}

const Table& table() {
  static const Table t = build_table();
  return t;
}

SimpleFactor identify(const mpz_class& order) {
  SimpleFactor f;
  f.order = order;
  auto names = simple_group_names(order);
  if (names.empty()) {
    f.name = "order " + order.get_str();
    return f;
  }
  f.identified = true;
  for (std::size_t i = 0; i < names.size(); ++i) f.name += (i ? "/" : "") + names[i];
  return f;
}

// |M| = s^k with s a tabled simple order; the largest such k wins.
std::pair<SimpleFactor, unsigned> split_power(const mpz_class& order) {
  for (unsigned k = 64; k >= 2; --k) {
    mpz_class root;
    if (mpz_root(root.get_mpz_t(), order.get_mpz_t(), k) == 0) continue;
    if (!simple_group_names(root).empty()) return {identify(root), k};
  }
  return {identify(order), 1};
}

}  // namespace

std::vector<std::string> simple_group_names(const mpz_class& order) {
  auto it = table().find(order);
  if (it == table().end()) return {};
  return it->second;
}

QuotientCheck check_no_nonsolvable_proper_quotient(const PermGroup& g, const Limits& limits) {
  PermGroup p = perfect_core(g);
  if (p.is_trivial()) return {true, true};
  auto mins = minimal_normal_subgroups(g, limits.structure_order, limits);
  for (const auto& n : mins.subgroups) {
    if (!n.contains(p)) return {false, true};
  }
  return {true, mins.exhaustive};
}

bool no_nonsolvable_proper_quotient(const PermGroup& g, const Limits& limits) {
  return check_no_nonsolvable_proper_quotient(g, limits).value;
}

std::vector<SimpleFactor> nonabelian_composition_factors(const PermGroup& g, const Limits& limits) {
  std::vector<SimpleFactor> out;
  PermGroup cur = g;
  while (true) {
    PermGroup p = perfect_core(cur);
    if (p.is_trivial()) break;
    auto mins = minimal_normal_subgroups(p, limits.structure_order, limits);
    // Distinct nonabelian minimal normal subgroups generate their direct
    // product; an abelian one is peeled alone.
    std::vector<Permutation> gens;
    for (const auto& m : mins.subgroups) {
      if (m.is_abelian()) continue;
      auto [t, k] = split_power(m.order());
      for (unsigned i = 0; i < k; ++i) out.push_back(t);
      gens.insert(gens.end(), m.generators().begin(), m.generators().end());
    }
    if (gens.empty()) {
      if (mins.subgroups.empty()) throw InvariantError("perfect group without minimal normal subgroup");
      gens = mins.subgroups.front().generators();
    }
    PermGroup s(p.degree(), gens);
    if (s.order() == p.order()) break;
    cur = coset_action(p, s, limits).image();
  }
  std::sort(out.begin(), out.end(), [](const SimpleFactor& a, const SimpleFactor& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.name < b.name;
  });
  return out;
}

bool factors_contained(const std::vector<SimpleFactor>& sub,
                       const std::vector<SimpleFactor>& super) {
  std::map<std::pair<mpz_class, std::string>, long> count;
  for (const auto& f : super) ++count[{f.order, f.name}];
  for (const auto& f : sub) {
    if (--count[{f.order, f.name}] < 0) return false;
  }
  return true;
}

}  // namespace redspec
