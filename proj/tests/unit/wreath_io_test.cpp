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

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <tuple>

#include "oracles/brute.hpp"
#include "redspec/error.hpp"
#include "redspec/permcore/actions.hpp"
#include "redspec/permcore/blocks.hpp"
#include "redspec/permcore/group_io.hpp"
#include "redspec/permcore/wreath.hpp"

namespace redspec {
namespace {

TEST(Wreath, SmallImprimitiveMatchesDihedral) {
  PermGroup w = wreath_product(PermGroup::symmetric(2), PermGroup::symmetric(2),
                               WreathKind::kImprimitive);
  EXPECT_EQ(w.degree(), 4u);
  EXPECT_EQ(w.order(), 8);
  EXPECT_EQ(oracle::closure(4, w.generators()).size(), 8u);
  EXPECT_TRUE(is_block_system(w, {{0, 1}, {2, 3}}));
  auto sys = block_systems(w);
  EXPECT_NE(std::find(sys.begin(), sys.end(), BlockSystem{{0, 1}, {2, 3}}), sys.end());
  // Relabel 0 1 2 3 -> 0 2 1 3 to land on the standard dihedral group.
  Permutation relabel = Permutation::from_cycles(4, {{1, 2}});
  std::vector<Permutation> conj;
  for (const auto& g : w.generators()) conj.push_back(g.conjugate_by(relabel));
  EXPECT_EQ(PermGroup(4, conj), PermGroup::dihedral(4));
}

TEST(Wreath, OrderFormula) {
  mpz_class f5 = 120, expected = f5 * f5 * f5 * f5 * f5 * f5;
  EXPECT_EQ(wreath_product(PermGroup::symmetric(5), PermGroup::symmetric(5),
                           WreathKind::kImprimitive)
                .order(),
            expected);
  EXPECT_EQ(SymWreathSym(5, 5).order(), expected);
  for (auto [k, m] : {std::pair{2, 3}, {3, 2}, {3, 3}, {2, 4}, {4, 2}}) {
    PermGroup u = PermGroup::symmetric(k), v = PermGroup::cyclic(m);
    mpz_class want;
    mpz_pow_ui(want.get_mpz_t(), u.order().get_mpz_t(), m);
    want *= v.order();
    EXPECT_EQ(wreath_product(u, v, WreathKind::kImprimitive).order(), want);
    EXPECT_EQ(wreath_product(u, v, WreathKind::kProduct).order(), want);
  }
  PermGroup trivial_top = wreath_product(PermGroup::trivial(1), PermGroup::dihedral(5),
                                         WreathKind::kImprimitive);
  EXPECT_EQ(trivial_top, PermGroup::dihedral(5));
  Limits tight;
  tight.product_degree = 100;
  EXPECT_THROW(wreath_product(PermGroup::symmetric(5), PermGroup::symmetric(3),
                              WreathKind::kProduct, tight),
               ResourceError);
}

TEST(Wreath, ProductActionIsHomomorphism) {
  PermGroup imp = SymWreathSym(3, 3).imprimitive_group();
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    auto x = imp.random_element(rng), y = imp.random_element(rng);
    auto px = product_permutation(split_imprimitive(x, 3));
    auto py = product_permutation(split_imprimitive(y, 3));
    EXPECT_EQ(product_permutation(split_imprimitive(x * y, 3)), px * py);
    EXPECT_EQ(imprimitive_permutation(split_imprimitive(x, 3)), x);
  }
}

// (class size, element order, block-action order) for every class.
using Signature = std::multiset<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>>;

Signature brute_signature(std::size_t k, std::size_t m) {
  PermGroup g = SymWreathSym(k, m).imprimitive_group();
  auto elems = oracle::closure(k * m, g.generators());
  Signature sig;
  for (const auto& cls : oracle::conjugacy_classes(elems)) {
    auto w = split_imprimitive(cls.front(), k);
    sig.emplace(cls.size(), cls.front().order(), w.top.order());
  }
  return sig;
}

TEST(Wreath, DescriptorClassesMatchBruteForce) {
  for (auto [k, m] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
    SymWreathSym d(k, m);
    auto classes = d.classes();
    Signature sig;
    mpz_class total = 0;
    for (const auto& c : classes) {
      sig.emplace(c.size.get_ui(), c.element_order, c.top_order);
      total += c.size;
      auto rep = imprimitive_permutation(d.representative(c));
      EXPECT_EQ(rep.order(), c.element_order);
      EXPECT_EQ(d.representative(c).top.order(), c.top_order);
    }
    EXPECT_EQ(total, d.order());
    EXPECT_EQ(sig, brute_signature(k, m)) << k << " wr " << m;
  }
  EXPECT_EQ(SymWreathSym(2, 2).classes().size(), 5u);
}

TEST(Wreath, DescriptorRepresentativesAreNotConjugate) {
  SymWreathSym d(3, 2);
  PermGroup g = d.imprimitive_group();
  auto elems = oracle::closure(6, g.generators());
  std::set<std::vector<Permutation>> seen;
  for (const auto& cls : d.classes()) {
    auto rep = imprimitive_permutation(d.representative(cls));
    std::set<Permutation> orbit;
    for (const auto& x : elems) orbit.insert(rep.conjugate_by(x));
    EXPECT_EQ(orbit.size(), cls.size.get_ui());
    EXPECT_TRUE(seen.emplace(orbit.begin(), orbit.end()).second);
  }
}

TEST(Wreath, ClassSizesSumToOrder) {
  for (std::size_t k = 1; k <= 5; ++k)
    for (std::size_t m = 1; m <= 5; ++m) {
      SymWreathSym d(k, m);
      mpz_class total = 0;
      d.for_each_class([](const Partition&) { return true; },
                       [&](const WreathClass& c) { total += c.size; });
      EXPECT_EQ(total, d.order()) << k << " " << m;
    }
}

TEST(GroupIo, ParsesCommentsAndChains) {
  auto g = parse_group_text(
      "# dihedral\n"
      "\n"
      "degree 4\n"
      "(1 2 3 4)   # rotation\n"
      "(1 3)\n"
      "subgroup: (1 3); (2 4)\n"
      "subgroup:\n");
  EXPECT_EQ(g.degree, 4u);
  ASSERT_EQ(g.generators.size(), 2u);
  EXPECT_EQ(g.group().order(), 8);
  ASSERT_EQ(g.subgroups.size(), 2u);
  EXPECT_EQ(g.subgroups[0].size(), 2u);
  EXPECT_TRUE(g.subgroups[1].empty());
  EXPECT_EQ(format_group_text(parse_group_text(format_group_text(g))), format_group_text(g));
}

TEST(GroupIo, ReportsLineAndColumn) {
  try {
    parse_group_text("degree 4\n(1 2)\n  (1 5)\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 6u);
  }
  try {
    parse_group_text("(1 2)\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  EXPECT_THROW(parse_group_text("degree x\n"), ParseError);
  EXPECT_THROW(parse_group_text("degree 3\n(1 2 1)\n"), ParseError);
}

TEST(GroupIo, RandomPermutationRoundTrip) {
  std::mt19937_64 rng(77);
  for (const auto& p : oracle::random_permutations(12, 100, rng))
    EXPECT_EQ(Permutation::parse(p.to_string(), 12), p);
}

}  // namespace
}  // namespace redspec
