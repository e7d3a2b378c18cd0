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

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "cli/cli.hpp"
#include "oracles/brute.hpp"
#include "oracles/poly_brute.hpp"
#include "redspec/permcore/group_io.hpp"
#include "redspec/speclab/rat_poly.hpp"

namespace redspec {
namespace {

using nlohmann::json;

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(REDSPEC_FIXTURE_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("redspec_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, cli::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsageError);
  EXPECT_EQ(run({"wreath-scan", "--k", "5", "--bogus"}).code, cli::kUsageError);
  EXPECT_EQ(run({"group-info", "--group", "/nonexistent/file"}).code, cli::kUsageError);
  EXPECT_EQ(run({"table1", "--row", "12", "--ell", "21"}).code, cli::kUsageError);
  EXPECT_EQ(run({"wreath-scan", "--k", "5", "--cap", "nonsense=4"}).code, cli::kUsageError);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, FileParseErrorsCarryLineAndColumn) {
  auto bad = temp_file("bad_group.txt", "degree 4\n(1 2 3 4)\n(1 2 9)\n");
  auto r = run({"group-info", "--group", bad});
  EXPECT_EQ(r.code, cli::kUsageError);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  auto chain = temp_file("bad_chain.txt", "x^2 - 2\nx^^2\n");
  r = run({"speclab", "scan", "--chain", chain, "--ints", "0", "1"});
  EXPECT_EQ(r.code, cli::kUsageError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST(Cli, Table1SingleRowAndViolation) {
  auto r = run({"--json", "table1", "--row", "1", "--ell", "21", "--a", "1"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["natural_genus"], 0);
  EXPECT_EQ(j["two_set_genus"], 0);
  r = run({"table1", "--row", "1", "--ell", "21", "--a", "3"});
  EXPECT_EQ(r.code, cli::kDomainError);
  EXPECT_NE(r.err.find("gcd(a, l) = 1"), std::string::npos) << r.err;
}

TEST(Cli, WreathScanJsonIsExact) {
  auto r = run({"wreath-scan", "--k", "5", "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out, "{\"flagged\":[],\"k\":5}\n");
  EXPECT_EQ(run({"redset", "wreath-scan", "--json", "--k", "5"}).out, r.out);
}

TEST(Cli, ChebyshevCandidates) {
  auto r = run({"redset-candidates", "--tuple", fixture("d4_tuple.txt"), "--infinity", "0", "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = json::parse(r.out);
  ASSERT_EQ(j["candidates"].size(), 2u);
  EXPECT_EQ(j["candidates"][0]["index"], 2);
  EXPECT_EQ(j["candidates"][1]["index"], 4);
  for (const auto& c : j["candidates"]) EXPECT_EQ(c["genus"], 0);
}

TEST(Cli, ScanWindowsAndExitCodes) {
  auto r = run({"speclab", "scan", "--chain", fixture("chebyshev_chain.txt"), "--ints", "-3", "-1", "--json"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = json::parse(r.out);
  ASSERT_EQ(j["records"].size(), 3u);
  EXPECT_EQ(j["records"][0]["t0"], "-3");
  EXPECT_EQ(j["window"], "integers [-3, -1]");

  r = run({"speclab-scan", "--chain", fixture("chebyshev_chain.txt"), "--ints", "1", "0", "--json"});
  EXPECT_EQ(json::parse(r.out)["records"], json::array());

  auto sd = temp_file("sd.txt", "x^8 - 40*x^6 + 352*x^4 - 960*x^2 + 576\n");
  r = run({"speclab", "scan", "--chain", sd, "--ints", "0", "0", "--recombination-cap", "2"});
  EXPECT_EQ(r.code, cli::kUnknowns);
  EXPECT_EQ(run({"speclab", "scan", "--chain", sd, "--ints", "0", "0"}).code, cli::kOk);
}

TEST(Cli, CapBreachesAreNamedDomainErrors) {
  auto r = run({"wreath-scan", "--k", "5", "--cap", "product_degree=100"});
  EXPECT_EQ(r.code, cli::kDomainError);
  EXPECT_NE(r.err.find("product_degree"), std::string::npos);
  r = run({"--cap", "coset_index=1", "redset", "candidates", "--tuple", fixture("d4_tuple.txt")});
  EXPECT_EQ(r.code, cli::kDomainError);
  EXPECT_NE(r.err.find("coset_index"), std::string::npos);
}

TEST(Cli, PermutationsRoundTripThroughGroupFiles) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + rng() % 9;
    auto perms = oracle::random_permutations(n, 1, rng);
    GroupText t{n, perms, {}};
    auto path = temp_file("perm.txt", format_group_text(t));
    auto r = run({"group-info", "--group", path, "--json"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const std::string printed = json::parse(r.out)["generators"][0];
    EXPECT_EQ(printed, perms[0].to_string());
    EXPECT_EQ(Permutation::parse(printed, n), perms[0]);
  }
}

TEST(Cli, PolynomialsRoundTripThroughChainFiles) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    RatPoly p = oracle::random_rat_poly(1 + static_cast<int>(rng() % 7), 9, rng);
    if (p.degree() < 1) continue;
    auto path = temp_file("poly.txt", to_string(p) + "\n");
    auto r = run({"speclab", "scan", "--chain", path, "--ints", "1", "0", "--json"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const std::string printed = json::parse(r.out)["f"];
    EXPECT_EQ(printed, to_string(p));
    EXPECT_EQ(parse_poly(printed), p);
  }
}

TEST(Cli, JsonIsByteDeterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"--json", "table1", "--all", "--lo", "20", "--hi", "30"},
      {"--json", "redset-candidates", "--tuple", fixture("d4_tuple.txt"), "--infinity", "0"},
      {"--json", "speclab", "scan", "--chain", fixture("chebyshev_chain.txt"), "--ints", "-40", "40"},
      {"--json", "group-info", "--group", fixture("d4_tuple.txt")},
      {"--json", "lemma-check", "--chain", fixture("s5_natural_chain.txt"), "--u", fixture("a5.txt")},
  };
  for (const auto& c : commands) {
    auto a = run(c), b = run(c);
    ASSERT_EQ(a.code, cli::kOk) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
  auto one = run({"--json", "--threads", "1", "speclab-scan", "--chain", fixture("chebyshev_chain.txt"), "--grid",
                  "6", "3"});
  auto three = run({"--json", "--threads", "3", "speclab-scan", "--chain", fixture("chebyshev_chain.txt"),
                    "--grid", "6", "3"});
  EXPECT_EQ(one.out, three.out);
}

}  // namespace
}  // namespace redspec
