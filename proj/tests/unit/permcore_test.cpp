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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles/brute.hpp"
#include "redspec/error.hpp"
#include "redspec/permcore/actions.hpp"
#include "redspec/permcore/blocks.hpp"
#include "redspec/permcore/normal.hpp"
#include "redspec/permcore/perm_group.hpp"

namespace redspec {
namespace {

Permutation P(std::size_t n, std::string_view s) { return Permutation::parse(s, n); }

// Subgroups of S_n generated by a few permutations of small support, so the
// sample covers intransitive, imprimitive and primitive groups.
std::vector<PermGroup> random_subgroups(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<PermGroup> out;
  while (out.size() < count) {
    std::size_t k = 1 + rng() % 3;
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t support = 2 + rng() % (n - 1);
      std::vector<Point> pts(n);
      std::iota(pts.begin(), pts.end(), 0);
      std::shuffle(pts.begin(), pts.end(), rng);
      pts.resize(support);
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), 0);
      std::vector<Point> shuffled = pts;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (std::size_t j = 0; j < support; ++j) img[pts[j]] = shuffled[j];
      gens.emplace_back(std::move(img));
    }
    out.emplace_back(n, std::move(gens));
  }
  return out;
}

TEST(Permutation, ProductActsLeftToRight) {
  auto a = P(3, "(1 2)");
  auto b = P(3, "(2 3)");
  // 1 -> 2 under a, then 2 -> 3 under b.
  EXPECT_EQ((a * b)(0), 2u);
  EXPECT_EQ((a * b).to_string(), "(1 3 2)");
}

TEST(Permutation, ParseAndPrintRoundTrip) {
  for (auto s : {"()", "(1 2 3)(4 5)", "(2 7)", "(1 3 5 7)(2 4)"}) {
    EXPECT_EQ(P(8, s).to_string(), s);
  }
  EXPECT_THROW(P(3, "(1 2"), ParseError);
  EXPECT_THROW(P(3, "(1 4)"), ParseError);
  EXPECT_THROW(P(3, "(1 2 1)"), InputError);
}

TEST(Permutation, OrderAndCycleType) {
  auto x = P(9, "(1 2 3)(4 5)(6 7 8 9)");
  EXPECT_EQ(x.order(), 12u);
  EXPECT_EQ(x.cycle_type(), (Partition{4, 3, 2}));
  EXPECT_EQ(x.num_cycles(), 3u);
  EXPECT_EQ(x.pow(12), Permutation::identity(9));
  EXPECT_EQ(x.pow(-1), x.inverse());
  EXPECT_EQ(format_partition(P(5, "(1 2)").cycle_type()), "[1^3,2]");
}

TEST(PermGroup, StandardOrders) {
  EXPECT_EQ(PermGroup::symmetric(4).order(), 24);
  EXPECT_EQ(PermGroup::symmetric(10).order(), 3628800);
  EXPECT_EQ(PermGroup::alternating(7).order(), 2520);
  EXPECT_EQ(PermGroup::dihedral(4).order(), 8);
  EXPECT_EQ(PermGroup::cyclic(9).order(), 9);
  EXPECT_EQ(PermGroup::trivial(5).order(), 1);
  EXPECT_EQ(PermGroup(4, {P(4, "(1 2 3 4)"), P(4, "(1 3)")}).order(), 8);
  mpz_class s30 = 1;
  for (int i = 2; i <= 30; ++i) s30 *= i;
  EXPECT_EQ(PermGroup::symmetric(30).order(), s30);
}

TEST(PermGroup, OrderMatchesClosureOnRandomSubgroupsOfS8) {
  for (const auto& g : random_subgroups(8, 50, 17)) {
    auto elems = oracle::closure(8, g.generators());
    ASSERT_EQ(g.order(), elems.size());
    for (const auto& x : elems) ASSERT_TRUE(g.contains(x));
  }
}

TEST(PermGroup, MembershipRejectsOutsiders) {
  PermGroup a6 = PermGroup::alternating(6);
  EXPECT_FALSE(a6.contains(P(6, "(1 2)")));
  EXPECT_TRUE(a6.contains(P(6, "(1 2)(3 4)")));
  std::mt19937_64 rng(3);
  for (const auto& x : oracle::random_permutations(6, 200, rng)) {
    EXPECT_EQ(a6.contains(x), (6 - x.num_cycles()) % 2 == 0);
  }
}

TEST(PermGroup, IndexBijection) {
  PermGroup g(6, {P(6, "(1 2 3)(4 5)"), P(6, "(1 4)(2 6)")});
  std::set<Permutation> seen;
  for (std::uint64_t i = 0; i < g.order_u64(); ++i) {
    auto x = g.chain().element_at(i);
    EXPECT_EQ(g.chain().index_of(x), i);
    seen.insert(x);
  }
  EXPECT_EQ(seen, oracle::closure(6, g.generators()));
}

TEST(PermGroup, EqualityIsAsSubgroups) {
  PermGroup a(4, {P(4, "(1 2 3 4)"), P(4, "(1 2)")});
  EXPECT_EQ(a, PermGroup::symmetric(4));
  EXPECT_FALSE(a == PermGroup::alternating(4));
  auto r = a.reduced_generators();
  EXPECT_EQ(PermGroup(4, r), a);
  EXPECT_EQ(r, PermGroup::symmetric(4).reduced_generators());
}

TEST(PermGroup, OrbitsMatchOracle) {
  for (const auto& g : random_subgroups(8, 30, 5))
    EXPECT_EQ(orbits(g), oracle::point_orbits(8, oracle::closure(8, g.generators())));
}

TEST(PermGroup, PointwiseStabilizer) {
  PermGroup s6 = PermGroup::symmetric(6);
  const Point pts[] = {4, 1};
  auto st = pointwise_stabilizer(s6, pts);
  EXPECT_EQ(st.order(), 24);
  for (const auto& x : st.generators()) {
    EXPECT_EQ(x(4), 4u);
    EXPECT_EQ(x(1), 1u);
  }
}

TEST(Blocks, MatchInvariantPartitions) {
  for (const auto& g : random_subgroups(8, 60, 11)) {
    if (!is_transitive(g)) continue;
    auto parts = oracle::invariant_partitions(8, g.generators());
    std::vector<BlockSystem> nontrivial;
    for (auto& p : parts)
      if (p.size() > 1 && p.size() < 8) nontrivial.push_back(p);
    std::vector<BlockSystem> minimal;
    for (const auto& p : nontrivial) {
      bool m = true;
      for (const auto& q : nontrivial)
        if (q != p && refines(q, p)) m = false;
      if (m) minimal.push_back(p);
    }
    auto got = block_systems(g);
    std::sort(minimal.begin(), minimal.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, minimal);
    EXPECT_EQ(is_primitive(g), nontrivial.empty());
  }
}

TEST(Blocks, DihedralSquare) {
  auto sys = block_systems(PermGroup::dihedral(4));
  ASSERT_EQ(sys.size(), 1u);
  EXPECT_EQ(sys[0], (BlockSystem{{0, 2}, {1, 3}}));
  EXPECT_THROW(block_systems(PermGroup(4, {P(4, "(1 2)")})), ContractError);
}

TEST(Actions, CosetActionIsTransitiveHomomorphism) {
  PermGroup s5 = PermGroup::symmetric(5);
  PermGroup a4(5, {P(5, "(1 2 3)"), P(5, "(2 3 4)")});
  Action act = coset_action(s5, a4);
  EXPECT_EQ(act.degree(), 10u);
  PermGroup img = act.image();
  EXPECT_TRUE(is_transitive(img));
  EXPECT_EQ(img.order(), 120);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    auto x = s5.random_element(rng), y = s5.random_element(rng);
    EXPECT_EQ(act(x * y), act(x) * act(y));
    EXPECT_EQ(act(x)(0) == 0, a4.contains(x));
  }
  EXPECT_TRUE(act.kernel().is_trivial());
  EXPECT_THROW(coset_action(a4, s5), ContractError);
}

TEST(Actions, CoreMatchesIntersectionOfConjugates) {
  for (const auto& g : random_subgroups(6, 25, 23)) {
    auto elems = oracle::closure(6, g.generators());
    if (elems.size() < 2) continue;
    PermGroup s(6, {*std::next(elems.begin(), elems.size() / 2)});
    std::set<Permutation> inter = oracle::closure(6, s.generators());
    for (const auto& x : elems) {
      std::set<Permutation> conj, next;
      for (const auto& h : oracle::closure(6, s.generators())) conj.insert(h.conjugate_by(x));
      std::set_intersection(inter.begin(), inter.end(), conj.begin(), conj.end(),
                            std::inserter(next, next.begin()));
      inter = next;
    }
    EXPECT_EQ(core(g, s).order(), inter.size());
  }
}

TEST(Actions, TwoSetAndBlockActions) {
  PermGroup s5 = PermGroup::symmetric(5);
  Action two = two_set_action(s5);
  EXPECT_EQ(two.degree(), 10u);
  EXPECT_EQ(two.image().order(), 120);
  EXPECT_EQ(two(P(5, "(1 2)")).cycle_type(), (Partition{2, 2, 2, 1, 1, 1, 1}));
  Action blk = block_action(PermGroup::dihedral(4), {{0, 2}, {1, 3}});
  EXPECT_EQ(blk.image().order(), 2);
  EXPECT_EQ(blk.kernel().order(), 4);
  EXPECT_THROW(block_action(PermGroup::dihedral(4), {{0, 1}, {2, 3}}), ContractError);
}

TEST(Actions, SetStabilizerMatchesFilter) {
  std::mt19937_64 rng(9);
  for (const auto& g : random_subgroups(7, 30, 29)) {
    std::vector<Point> subset;
    for (Point p = 0; p < 7; ++p)
      if (rng() % 2) subset.push_back(p);
    std::size_t expected = 0;
    for (const auto& x : oracle::closure(7, g.generators())) {
      std::vector<Point> img;
      for (Point p : subset) img.push_back(x(p));
      std::sort(img.begin(), img.end());
      if (img == subset) ++expected;
    }
    PermGroup st = set_stabilizer(g, subset);
    EXPECT_EQ(st.order(), expected);
    for (const auto& x : st.generators()) EXPECT_TRUE(g.contains(x));
  }
}

TEST(Normal, DerivedSeriesOfS4) {
  auto series = derived_series(PermGroup::symmetric(4));
  std::vector<mpz_class> orders;
  for (const auto& g : series) orders.push_back(g.order());
  EXPECT_EQ(orders, (std::vector<mpz_class>{24, 12, 4, 1}));
  EXPECT_TRUE(is_solvable(PermGroup::symmetric(4)));
  EXPECT_FALSE(is_solvable(PermGroup::symmetric(5)));
  EXPECT_TRUE(is_perfect(PermGroup::alternating(5)));
}

TEST(Normal, ClassesAndNormalSubgroupsMatchOracle) {
  for (const auto& g : random_subgroups(6, 25, 31)) {
    auto elems = oracle::closure(6, g.generators());
    auto cls = conjugacy_classes(g);
    auto ocls = oracle::conjugacy_classes(elems);
    ASSERT_EQ(cls.size(), ocls.size());
    std::multiset<std::uint64_t> a, b;
    for (const auto& c : cls) a.insert(c.size);
    for (const auto& c : ocls) b.insert(c.size());
    EXPECT_EQ(a, b);
    auto ns = normal_subgroups(g);
    auto ons = oracle::normal_subgroups(elems);
    EXPECT_EQ(ns.size(), ons.size());
    auto mn = minimal_normal_subgroups(g, 1e7);
    auto omn = oracle::minimal_normal_subgroups(elems);
    ASSERT_EQ(mn.subgroups.size(), omn.size());
    for (const auto& n : mn.subgroups) {
      auto ne = oracle::closure(6, n.generators());
      EXPECT_NE(std::find(omn.begin(), omn.end(), ne), omn.end());
    }
  }
}

TEST(Normal, SampledMinimalNormalsAgreeOnLargeGroup) {
  // A5 x A5 x A5 acting on 15 points, order 216000.
  std::vector<Permutation> gens;
  for (int b = 0; b < 3; ++b) {
    std::vector<std::vector<Point>> c1{{Point(5 * b), Point(5 * b + 1), Point(5 * b + 2)}};
    std::vector<std::vector<Point>> c2{
        {Point(5 * b), Point(5 * b + 1), Point(5 * b + 2), Point(5 * b + 3), Point(5 * b + 4)}};
    gens.push_back(Permutation::from_cycles(15, c1));
    gens.push_back(Permutation::from_cycles(15, c2));
  }
  PermGroup g(15, gens);
  Limits small;
  small.element_enumeration = 1000;
  auto sampled = minimal_normal_subgroups(g, 1e16, small);
  auto exact = minimal_normal_subgroups(g, 1e16);
  EXPECT_FALSE(sampled.exhaustive);
  EXPECT_TRUE(exact.exhaustive);
  ASSERT_EQ(exact.subgroups.size(), 3u);
  ASSERT_EQ(sampled.subgroups.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(sampled.subgroups[i], exact.subgroups[i]);
  EXPECT_EQ(sampled.socle, g);
}

TEST(Normal, ConjugacyOfSubgroups) {
  PermGroup s4 = PermGroup::symmetric(4);
  PermGroup a(4, {P(4, "(1 2)")}), b(4, {P(4, "(3 4)")}), c(4, {P(4, "(1 2)(3 4)")});
  EXPECT_EQ(are_conjugate(s4, a, b), std::optional<bool>(true));
  EXPECT_EQ(are_conjugate(s4, a, c), std::optional<bool>(false));
  Limits tight;
  tight.conjugacy_test_index = 2;
  EXPECT_EQ(are_conjugate(s4, a, b, tight), std::nullopt);
}

}  // namespace
}  // namespace redspec
