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

#include <random>
#include <set>

#include "oracles/poly_brute.hpp"
#include "redspec/error.hpp"
#include "redspec/speclab/factor.hpp"
#include "redspec/speclab/rat_poly.hpp"
#include "redspec/speclab/scan.hpp"

namespace {

using namespace redspec;

RatPoly P(const char* s) { return parse_poly(s); }

std::vector<mpq_class> sample_points() {
  return {mpq_class(0), mpq_class(1), mpq_class(-2), mpq_class(3, 7), mpq_class(-5, 3), mpq_class(11, 2)};
}

TEST(RatPoly, RingAxiomsOnRandomInputs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    RatPoly a = oracle::random_rat_poly(trial % 5, 9, rng);
    RatPoly b = oracle::random_rat_poly((trial + 2) % 6, 9, rng);
    RatPoly c = oracle::random_rat_poly((trial + 1) % 4, 9, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    for (const auto& t : sample_points()) {
      EXPECT_EQ((a * b)(t), a(t) * b(t));
      EXPECT_EQ((a - c)(t), a(t) - c(t));
      EXPECT_EQ(compose(a, b)(t), a(b(t)));
    }
    if (!b.is_zero()) {
      auto [q, r] = divmod(a, b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_LT(r.degree(), b.degree());
    }
  }
}

TEST(RatPoly, GcdDividesAndIsMonic) {
  RatPoly a = P("x^3 - 1"), b = P("x^2 - 1");
  EXPECT_EQ(gcd(a, b), P("x - 1"));
  RatPoly c = P("2*x^2 + 4*x + 2");
  EXPECT_EQ(gcd(c, c.derivative()), P("x + 1"));
  EXPECT_TRUE(gcd(RatPoly(), RatPoly()).is_zero());
}

TEST(RatPoly, ParsePrintRoundTrip) {
  EXPECT_EQ(to_string(P("x^4 - 4*x^2 + 2")), "x^4 - 4*x^2 + 2");
  EXPECT_EQ(to_string(P(" -x+3/6 ")), "-x + 1/2");
  EXPECT_EQ(to_string(P("2x^2 + x^2")), "3*x^2");
  EXPECT_EQ(to_string(P("0")), "0");
  EXPECT_EQ(P("3/2*x - 1"), RatPoly(std::vector<mpq_class>{mpq_class(-1), mpq_class(3, 2)}));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    RatPoly p = oracle::random_rat_poly(i % 9, 12, rng);
    EXPECT_EQ(parse_poly(to_string(p)), p) << to_string(p);
  }
}

TEST(RatPoly, ParseErrorsCarryColumns) {
  try {
    parse_poly("x^2 + * 3");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 7u);
  }
  EXPECT_THROW(parse_poly("x^2 3"), ParseError);
  EXPECT_THROW(parse_poly("1/0"), ParseError);
  EXPECT_THROW(parse_poly(""), ParseError);
  try {
    parse_chain("x^2 - 2\n# note\nx^ + 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  auto chain = parse_chain("x^2 - 2  # outer\n\nx^2 - 2\n");
  ASSERT_EQ(chain.size(), 2u);
  EXPECT_EQ(compose_chain(chain), P("x^4 - 4*x^2 + 2"));
}

TEST(Compose, Examples) {
  EXPECT_EQ(compose(P("x^2 - 2"), P("x^2 - 2")), P("x^4 - 4*x^2 + 2"));
  RatPoly h = P("5*x^3 - 1/2*x + 7");
  EXPECT_EQ(compose(RatPoly::x(), h), h);
  EXPECT_EQ(compose(h, RatPoly::x()), h);
  EXPECT_EQ(compose(P("x^2"), P("x^3")), P("x^6"));
  EXPECT_EQ(compose(P("x^3 + x"), P("2*x - 1")).degree(), 3);
}

TEST(Chebyshev, SmallDegrees) {
  EXPECT_EQ(chebyshev(0), P("2"));
  EXPECT_EQ(chebyshev(1), P("x"));
  EXPECT_EQ(chebyshev(2), P("x^2 - 2"));
  EXPECT_EQ(chebyshev(4), P("x^4 - 4*x^2 + 2"));
}

TEST(Chebyshev, DefiningIdentityAtSamplePoints) {
  // T_n(t + 1/t) = t^n + t^-n; n + 1 distinct values of t + 1/t pin T_n down.
  for (unsigned n = 0; n <= 12; ++n) {
    RatPoly t = chebyshev(n);
    for (unsigned k = 0; k <= n; ++k) {
      mpq_class s(static_cast<long>(k) + 2, 3);
      mpq_class sn = 1, isn = 1;
      for (unsigned i = 0; i < n; ++i) {
        sn *= s;
        isn /= s;
      }
      EXPECT_EQ(t(s + 1 / s), sn + isn) << "n=" << n;
    }
  }
}

TEST(Chebyshev, Semigroup) {
  for (unsigned m = 0; m <= 8; ++m)
    for (unsigned n = 0; n <= 8; ++n)
      if (m > 0 && n > 0) EXPECT_EQ(compose(chebyshev(m), chebyshev(n)), chebyshev(m * n)) << m << "," << n;
}

TEST(Decompose, Examples) {
  auto t4 = decompose(chebyshev(4));
  ASSERT_EQ(t4.size(), 1u);
  ASSERT_TRUE(t4[0].parts.has_value());
  const auto& [g, h] = *t4[0].parts;
  EXPECT_EQ(compose(g, h), chebyshev(4));
  // Linearly equivalent to T_2 o T_2: h = T_2 + 2.
  EXPECT_EQ(h - chebyshev(2), P("2"));

  EXPECT_TRUE(decompose(P("x^5 - x")).empty());
  EXPECT_TRUE(is_indecomposable(P("x^5 - x")));

  auto s = decompose(P("x^6 + 2*x^3"));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].inner_degree, 2u);
  EXPECT_FALSE(s[0].parts.has_value());
  EXPECT_EQ(s[1].inner_degree, 3u);
  ASSERT_TRUE(s[1].parts.has_value());
  EXPECT_EQ(s[1].parts->first, P("x^2 + 2*x"));
  EXPECT_EQ(s[1].parts->second, P("x^3"));

  EXPECT_TRUE(is_indecomposable(P("x^7 - 7*x + 3")));
  EXPECT_FALSE(is_indecomposable(compose(P("x^7 - 7*x + 3"), P("x^5 - 5*x + 1"))));
  EXPECT_THROW(decompose(P("x + 1")), ContractError);
}

TEST(Decompose, ComposeRoundTrip) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int dg = 2 + trial % 5, dh = 2 + (trial / 5) % 5;
    RatPoly g = oracle::random_rat_poly(dg, 10, rng);
    RatPoly h = oracle::random_rat_poly(dh, 10, rng);
    RatPoly f = compose(g, h);
    RatPoly normal_h = (h - RatPoly::constant(h.coeff(0))) * mpq_class(1 / h.leading());
    bool found = false;
    for (const auto& s : decompose(f)) {
      if (s.inner_degree != static_cast<unsigned>(dh)) continue;
      ASSERT_TRUE(s.parts.has_value()) << to_string(f);
      EXPECT_EQ(s.parts->second, normal_h);
      EXPECT_EQ(compose(s.parts->first, s.parts->second), f);
      found = true;
    }
    EXPECT_TRUE(found);
  }
}

TEST(FactorQ, Examples) {
  auto a = factor_q(P("x^4 - 4*x^2 - 5"));
  EXPECT_EQ(a.status, FactorStatus::kFactored);
  ASSERT_EQ(a.factors.size(), 2u);
  EXPECT_EQ(a.factors[0].poly, P("x^2 - 5"));
  EXPECT_EQ(a.factors[1].poly, P("x^2 + 1"));

  auto b = factor_q(P("x^4 - 4*x^2 - 1"));
  EXPECT_EQ(b.status, FactorStatus::kIrreducibleCertified);
  ASSERT_EQ(b.certificate.size(), 1u);
  EXPECT_FALSE(b.certificate[0].empty());

  auto c = factor_q(P("x^4 - 4*x^2 + 36"));
  EXPECT_EQ(c.status, FactorStatus::kFactored);
  ASSERT_EQ(c.factors.size(), 2u);
  EXPECT_EQ(c.factors[0].poly, P("x^2 - 4*x + 6"));
  EXPECT_EQ(c.factors[1].poly, P("x^2 + 4*x + 6"));
  EXPECT_EQ(c.factors[0].poly * c.factors[1].poly, chebyshev(4) + RatPoly::constant(34));

  EXPECT_THROW(factor_q(RatPoly()), InputError);
}

TEST(FactorQ, ContentAndMultiplicity) {
  RatPoly f = P("3/2*x - 3") * P("x^2 + 1") * P("x - 2") * P("x^2 + 1");
  auto r = factor_q(f);
  EXPECT_EQ(r.status, FactorStatus::kFactored);
  EXPECT_EQ(expand(r), f);
  ASSERT_EQ(r.factors.size(), 2u);
  EXPECT_EQ(r.factors[0].poly, P("x - 2"));
  EXPECT_EQ(r.factors[0].multiplicity, 2u);
  EXPECT_EQ(r.factors[1].multiplicity, 2u);
  EXPECT_EQ(r.content, mpq_class(3, 2));
  EXPECT_EQ(factor_degrees(r), (std::vector<unsigned>{1, 1, 2, 2}));

  auto lin = factor_q(P("4*x + 6"));
  EXPECT_EQ(lin.status, FactorStatus::kIrreducibleCertified);
  EXPECT_EQ(lin.factors[0].poly, P("2*x + 3"));
  EXPECT_EQ(lin.content, mpq_class(2));
}

TEST(FactorQ, AgreesWithKroneckerOracle) {
  std::mt19937_64 rng(101);
  int reducible = 0;
  for (int trial = 0; trial < 160; ++trial) {
    RatPoly f;
    if (trial % 2 == 0) {
      f = oracle::random_int_poly(2 + trial % 4, 6, rng);
    } else {
      f = oracle::random_int_poly(1 + trial % 3, 4, rng) * oracle::random_int_poly(1 + (trial / 3) % 3, 4, rng);
    }
    auto r = factor_q(f);
    ASSERT_NE(r.status, FactorStatus::kUnknown) << to_string(f);
    EXPECT_EQ(expand(r), f);
    RatPoly sq = divmod(f, gcd(f, f.derivative())).quotient;
    const bool squarefree = sq.degree() == f.degree();
    const bool oracle_reducible = !squarefree || oracle::kronecker_factor(f).has_value();
    EXPECT_EQ(r.status == FactorStatus::kFactored, oracle_reducible) << to_string(f);
    for (const auto& pf : r.factors) {
      EXPECT_TRUE(pf.irreducible);
      EXPECT_FALSE(oracle::kronecker_factor(pf.poly).has_value()) << to_string(pf.poly);
    }
    reducible += oracle_reducible;
  }
  EXPECT_GT(reducible, 40);
}

TEST(FactorQ, RecombinationOnSwinnertonDyer) {
  // Irreducible, but splits into factors of degree <= 2 modulo every prime.
  RatPoly sd = P("x^8 - 40*x^6 + 352*x^4 - 960*x^2 + 576");
  auto r = factor_q(sd);
  EXPECT_EQ(r.status, FactorStatus::kIrreducibleCertified);
  EXPECT_NE(r.certificate[0].find("hensel"), std::string::npos);

  FactorOptions tight;
  tight.recombination_cap = 2;
  auto u = factor_q(sd, tight);
  EXPECT_EQ(u.status, FactorStatus::kUnknown);
  EXPECT_EQ(expand(u), sd);

  RatPoly prod = sd * P("x^2 - 3*x + 7");
  auto pr = factor_q(prod);
  EXPECT_EQ(pr.status, FactorStatus::kFactored);
  EXPECT_EQ(factor_degrees(pr), (std::vector<unsigned>{2, 8}));
}

TEST(FactorQ, LargeCompositeSpecialization) {
  RatPoly f = compose(P("x^7 - 7*x + 3"), P("x^5 - 5*x + 1"));
  auto r = factor_q(f - RatPoly::constant(3));
  EXPECT_EQ(r.status, FactorStatus::kFactored);
  EXPECT_EQ(factor_degrees(r), (std::vector<unsigned>{5, 30}));
  EXPECT_EQ(r.factors[0].poly, P("x^5 - 5*x + 1"));
  auto s = factor_q(f - RatPoly::constant(4));
  EXPECT_EQ(s.status, FactorStatus::kIrreducibleCertified);
}

TEST(FactorQ, DeterministicAcrossPrimeSeeds) {
  const std::vector<RatPoly> inputs = {
      P("x^4 - 4*x^2 + 36"), P("x^4 - 4*x^2 - 1"), P("x^8 - 40*x^6 + 352*x^4 - 960*x^2 + 576"),
      P("x^6 - 1"), chebyshev(6) + RatPoly::constant(1), P("x^5 - 5*x + 12")};
  std::mt19937_64 rng(77);
  for (const auto& f : inputs) {
    auto base = factor_q(f);
    for (int seed = 0; seed < 10; ++seed) {
      FactorOptions o;
      o.seed = rng();
      o.first_prime = 5 + rng() % 200;
      auto r = factor_q(f, o);
      EXPECT_EQ(r.status, base.status) << to_string(f);
      ASSERT_EQ(r.factors.size(), base.factors.size());
      for (std::size_t i = 0; i < r.factors.size(); ++i) EXPECT_EQ(r.factors[i].poly, base.factors[i].poly);
    }
  }
}

TEST(RationalRoots, SieveAgreesWithBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    RatPoly f = oracle::random_int_poly(1 + trial % 3, 5, rng) * oracle::random_int_poly(1 + trial % 2, 5, rng);
    auto roots = rational_roots(f);
    auto brute = oracle::brute_rational_roots(f);
    brute.erase(std::unique(brute.begin(), brute.end()), brute.end());
    EXPECT_EQ(roots, brute) << to_string(f);
  }
}

TEST(RationalRoots, LargeCoefficientsUseLifting) {
  const mpq_class r1(mpz_class("10000000000019"), 7);
  RatPoly f = (RatPoly::x() - RatPoly::constant(r1)) * P("x + 3") * P("x^2 + 1") *
              (RatPoly::x() - RatPoly::constant(mpq_class(-1, 2)));
  auto roots = rational_roots(f);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_EQ(roots[0], mpq_class(-3));
  EXPECT_EQ(roots[1], mpq_class(-1, 2));
  EXPECT_EQ(roots[2], r1);
}

TEST(ValueSet, Examples) {
  auto a = value_set_member(chebyshev(2), 7);
  EXPECT_TRUE(a.member);
  EXPECT_EQ(*a.witness, mpq_class(3));
  auto b = value_set_member(chebyshev(2), 3);
  EXPECT_FALSE(b.member);
  EXPECT_FALSE(b.witness.has_value());
  auto c = value_set_member(P("2*x + 5"), mpq_class(1, 3));
  EXPECT_TRUE(c.member);
  EXPECT_EQ(P("2*x + 5")(*c.witness), mpq_class(1, 3));
  EXPECT_THROW(value_set_member(P("4"), 1), ContractError);
}

TEST(ValueSet, SquaresClosedForm) {
  // t0 is a value of T_2 iff t0 + 2 is a rational square.
  for (long num = -30; num <= 60; ++num) {
    for (long den = 1; den <= 4; ++den) {
      mpq_class t(num, den);
      t.canonicalize();
      mpq_class s = t + 2;
      const bool square = sgn(s) >= 0 && mpz_perfect_square_p(s.get_num_mpz_t()) &&
                          mpz_perfect_square_p(s.get_den_mpz_t());
      EXPECT_EQ(value_set_member(chebyshev(2), t).member, square) << t.get_str();
    }
  }
}

std::set<long> integers_of(const std::vector<mpq_class>& v) {
  std::set<long> out;
  for (const auto& q : v) out.insert(q.get_num().get_si());
  return out;
}

TEST(Scan, ChebyshevWindowAgainstKronecker) {
  auto report = scan_window({chebyshev(2), chebyshev(2)}, 1, ScanWindow::integers(-40, 40));
  ASSERT_EQ(report.records.size(), 81u);
  std::vector<mpq_class> reducible;
  for (const auto& rec : report.records) {
    ASSERT_NE(rec.reducible, Reducibility::kUnknown);
    RatPoly g = report.f - RatPoly::constant(rec.t0);
    const bool oracle_red = oracle::kronecker_factor(g).has_value();
    EXPECT_EQ(rec.reducible == Reducibility::kReducible, oracle_red) << rec.t0.get_str();
    EXPECT_EQ(expand(rec.factorization), g);
    if (rec.reducible == Reducibility::kReducible) reducible.push_back(rec.t0);
  }
  EXPECT_EQ(integers_of(reducible), (std::set<long>{-34, -2, -1, 2, 7, 14, 23, 34}));
  EXPECT_EQ(integers_of(report.exceptions), (std::set<long>{-34}));
  EXPECT_EQ(report.hits, 8u);
  EXPECT_EQ(report.unknowns, 0u);
  const auto& e = report.records[40 - 34];
  EXPECT_EQ(e.t0, mpq_class(-34));
  ASSERT_EQ(e.factorization.factors.size(), 2u);
  EXPECT_EQ(e.factorization.factors[0].poly, P("x^2 - 4*x + 6"));
  EXPECT_EQ(e.factorization.factors[1].poly, P("x^2 + 4*x + 6"));
  // T_4 - t0 has a repeated root exactly at t0 = 2 and -2.
  EXPECT_EQ(report.discriminant_points, 2u);
  EXPECT_TRUE(report.records[40 + 2].discriminant_point);
  EXPECT_TRUE(report.records[40 - 2].discriminant_point);
  EXPECT_FALSE(report.notes.empty());
}

TEST(Scan, ValueSetMonotonicity) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 12; ++trial) {
    RatPoly f1 = oracle::random_int_poly(2 + trial % 2, 3, rng);
    RatPoly g = oracle::random_int_poly(1 + trial % 3, 3, rng);
    auto report = scan_window({f1, g}, 1, ScanWindow::integers(-15, 15));
    for (const auto& rec : report.records) {
      if (rec.in_value_set) {
        EXPECT_EQ(rec.reducible, Reducibility::kReducible) << to_string(f1) << " " << rec.t0.get_str();
        EXPECT_EQ(f1(*rec.witness), rec.t0);
      }
      if (rec.reducible == Reducibility::kReducible && !rec.discriminant_point && !rec.in_value_set) {
        EXPECT_TRUE(std::find(report.exceptions.begin(), report.exceptions.end(), rec.t0) !=
                    report.exceptions.end());
      }
    }
  }
}

TEST(Scan, SingleGenericPolynomialHasNoExceptions) {
  auto report = scan_window({P("x^3 + x + 1")}, 1, ScanWindow::grid(6, 3));
  EXPECT_TRUE(report.exceptions.empty());
  for (const auto& rec : report.records)
    EXPECT_EQ(rec.in_value_set, rec.reducible == Reducibility::kReducible) << rec.t0.get_str();
}

TEST(Scan, EmptyWindowAndGridOrder) {
  auto empty = scan_window({chebyshev(2)}, 1, ScanWindow::integers(3, 2));
  EXPECT_TRUE(empty.records.empty());
  EXPECT_EQ(empty.hits, 0u);
  auto pts = ScanWindow::grid(2, 2).points();
  // 0 = 0/1 has height 1.
  std::vector<mpq_class> want = {mpq_class(-1),    mpq_class(0),    mpq_class(1), mpq_class(-2),
                                 mpq_class(-1, 2), mpq_class(1, 2), mpq_class(2)};
  EXPECT_EQ(pts, want);
}

TEST(Scan, DiscriminantPointsAreNotExceptions) {
  // x^3 - 3x - 2 = (x + 1)^2 (x - 2).
  auto report = scan_window({P("x^3 - 3*x")}, 1, ScanWindow::integers(-3, 3));
  EXPECT_EQ(report.discriminant_points, 2u);
  EXPECT_TRUE(report.records[1].discriminant_point);
  EXPECT_TRUE(report.records[5].discriminant_point);
  EXPECT_TRUE(report.exceptions.empty());
}

TEST(Scan, ThreadCountDoesNotChangeTheReport) {
  std::vector<RatPoly> chain = {P("x^3 - 2*x"), P("x^2 + x")};
  auto one = scan_window(chain, 1, ScanWindow::integers(-25, 25));
  ScanOptions o;
  o.threads = 3;
  auto three = scan_window(chain, 1, ScanWindow::integers(-25, 25), o);
  ASSERT_EQ(one.records.size(), three.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    EXPECT_EQ(one.records[i].t0, three.records[i].t0);
    EXPECT_EQ(one.records[i].reducible, three.records[i].reducible);
    EXPECT_EQ(one.records[i].factor_degrees, three.records[i].factor_degrees);
  }
  EXPECT_EQ(one.exceptions, three.exceptions);
}

TEST(Scan, ContractErrors) {
  EXPECT_THROW(scan_window({}, 1, ScanWindow::integers(0, 1)), ContractError);
  EXPECT_THROW(scan_window({chebyshev(2)}, 2, ScanWindow::integers(0, 1)), ContractError);
  EXPECT_THROW(scan_window({chebyshev(2), P("3")}, 1, ScanWindow::integers(0, 1)), ContractError);
}

}  // namespace
