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

#include "redspec/structure/lemmas.hpp"

#include <algorithm>
#include <random>

#include "redspec/error.hpp"
#include "redspec/permcore/actions.hpp"
#include "redspec/permcore/blocks.hpp"
#include "redspec/permcore/normal.hpp"

namespace redspec {

namespace {

constexpr std::uint64_t kMinimalitySeed = 0x6d696e6e6f726dULL;

// Classes of indices with equal groups, in order of first occurrence.
std::vector<std::vector<std::size_t>> group_equal(const std::vector<PermGroup>& groups) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> leader;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (groups[leader[c]] == groups[i]) {
        classes[c].push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) {
      classes.push_back({i});
      leader.push_back(i);
    }
  }
  return classes;
}

// The unique minimal normal subgroup of a primitive group, when it is
// nonabelian; nullopt otherwise.
std::optional<PermGroup> type_c_socle(const PermGroup& u, const Limits& limits) {
  if (!is_primitive(u)) return std::nullopt;
  auto mins = minimal_normal_subgroups(u, limits.structure_order, limits);
  if (mins.subgroups.size() != 1 || mins.subgroups.front().is_abelian()) return std::nullopt;
  return mins.subgroups.front();
}

std::vector<Permutation> mapped(const Action& act, const std::vector<Permutation>& xs) {
  std::vector<Permutation> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(act(x));
  return out;
}

}  // namespace

MinimalityCheck check_minimal_normal(const PermGroup& g, const PermGroup& n, const Limits& limits) {
  if (n.is_trivial() || !is_normal(g, n)) return {false, true};
  const mpz_class target = n.order();
  auto closure_is_n = [&](const Permutation& x) {
    Permutation one[] = {x};
    return normal_closure(g, one).order() == target;
  };
  if (g.order() <= limits.element_enumeration) {
    for (const auto& c : conjugacy_classes(g, limits)) {
      const auto ps = prime_divisors(c.element_order);
      if (ps.size() != 1 || ps.front() != c.element_order) continue;
      if (!n.contains(c.representative)) continue;
      if (!closure_is_n(c.representative)) return {false, true};
    }
    return {true, true};
  }
  std::mt19937_64 rng(kMinimalitySeed);
  for (std::uint32_t i = 0; i < limits.normal_samples; ++i) {
    Permutation x = n.random_element(rng);
    if (x.is_identity()) continue;
    const std::uint64_t o = x.order();
    Permutation y = x.pow(static_cast<std::int64_t>(o / prime_divisors(o).front()));
    if (!closure_is_n(y)) return {false, true};
  }
  return {true, false};
}

bool is_simple_at_scale(const PermGroup& l, const Limits& limits) {
  if (l.is_trivial() || !is_perfect(l)) return false;
  auto mins = minimal_normal_subgroups(l, limits.structure_order, limits);
  for (const auto& m : mins.subgroups) {
    if (m.order() != l.order()) return false;
  }
  return true;
}

SubdirectDecomposition subdirect_decompose(const PermGroup& k,
                                           const std::vector<std::vector<Point>>& factors,
                                           const PermGroup& l, const Limits& limits) {
  if (!is_simple_at_scale(l, limits)) throw PreconditionError("L is not nonabelian simple at tested scale");
  std::vector<PermGroup> kernels;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    PermGroup image = restriction_action(k, factors[i]).image();
    if (image.order() != l.order())
      throw PreconditionError("projection " + std::to_string(i + 1) + " is not onto L");
    kernels.push_back(pointwise_stabilizer(k, factors[i]));
  }
  SubdirectDecomposition out;
  out.partition = group_equal(kernels);
  mpz_class product = 1;
  for (const auto& cls : out.partition) {
    std::vector<bool> inside(k.degree(), false);
    for (std::size_t i : cls) {
      for (Point p : factors[i]) inside[p] = true;
    }
    std::vector<Point> outside;
    for (Point p = 0; p < k.degree(); ++p) {
      if (!inside[p]) outside.push_back(p);
    }
    PermGroup comp = pointwise_stabilizer(k, outside);
    if (comp.order() != l.order()) throw InvariantError("diagonal component order differs from |L|");
    product *= comp.order();
    out.components.push_back(std::move(comp));
  }
  if (product != k.order()) throw InvariantError("component orders do not multiply to |K|");
  return out;
}

PermGroup center(const PermGroup& g, const Limits& limits) {
  std::vector<Permutation> central;
  for (const auto& x : g.elements(limits)) {
    bool ok = !x.is_identity();
    for (const auto& y : g.generators()) {
      if (!ok) break;
      ok = x * y == y * x;
    }
    if (ok) central.push_back(x);
  }
  return PermGroup(g.degree(), std::move(central));
}

GoursatReport goursat_split_check(const PermGroup& a, const PermGroup& b, const Limits& limits) {
  PermGroup ab = direct_product(a, b);
  if (ab.order() > limits.element_enumeration) {
    throw ResourceError("element_enumeration", limits.element_enumeration,
                        "normal subgroups of a group of order " + ab.order().get_str());
  }
  std::vector<Point> a_points, b_points;
  for (Point p = 0; p < a.degree(); ++p) a_points.push_back(p);
  for (Point p = 0; p < b.degree(); ++p) b_points.push_back(static_cast<Point>(a.degree() + p));

  GoursatReport report;
  report.hypothesis_centerless = true;
  for (const auto& m : normal_subgroups(a, limits)) {
    PermGroup q = coset_action(a, m, limits).image();
    if (!center(q, limits).is_trivial()) {
      report.hypothesis_centerless = false;
      break;
    }
  }
  for (auto& n : normal_subgroups(ab, limits)) {
    GoursatEntry e;
    e.order = n.order();
    PermGroup in_a = pointwise_stabilizer(n, b_points);
    PermGroup in_b = pointwise_stabilizer(n, a_points);
    e.split = in_a.order() * in_b.order() == e.order;
    if (!e.split) ++report.failures;
    e.subgroup = std::move(n);
    report.entries.push_back(std::move(e));
  }
  return report;
}

BlockKernelSocle block_kernel_socle(const PermGroup& g, const std::vector<std::vector<Point>>& blocks,
                                    const Limits& limits) {
  if (!is_transitive(g)) throw PreconditionError("g is not transitive");
  if (blocks.size() < 2 || blocks.front().size() < 2 || !is_block_system(g, blocks))
    throw PreconditionError("not a nontrivial block system of g");

  BlockKernelSocle out;
  std::vector<PermGroup> u(blocks.size()), soc(blocks.size());
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    PermGroup stab = set_stabilizer(g, blocks[j], limits);
    u[j] = restriction_action(stab, blocks[j]).image();
    auto s = type_c_socle(u[j], limits);
    if (!s) {
      throw PreconditionError("block-stabilizer image on block " + std::to_string(j + 1) +
                              " is not primitive with a unique nonabelian minimal normal subgroup");
    }
    soc[j] = *s;
  }
  out.block_group = u[0];
  out.block_socle = soc[0];

  out.kernel = block_action(g, blocks).kernel();
  if (out.kernel.is_trivial()) {
    out.kernel_trivial = true;
    out.socle = out.kernel;
    return out;
  }

  // soc(K) is the kernel of K -> prod_j U_j / soc(U_j).
  std::vector<Permutation> images(out.kernel.generators().size());
  std::size_t total = 0;
  std::vector<Action> quotient;
  for (std::size_t j = 0; j < blocks.size(); ++j) quotient.push_back(coset_action(u[j], soc[j], limits));
  for (const auto& q : quotient) total += q.degree();
  std::vector<Action> restrict_k;
  for (const auto& b : blocks) restrict_k.push_back(restriction_action(out.kernel, b));
  for (std::size_t gi = 0; gi < images.size(); ++gi) {
    const Permutation& x = out.kernel.generators()[gi];
    std::vector<Point> img;
    img.reserve(total);
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      Permutation y = quotient[j](restrict_k[j](x));
      const std::size_t off = img.size();
      for (Point p = 0; p < y.degree(); ++p) img.push_back(static_cast<Point>(off + y(p)));
    }
    images[gi] = Permutation(std::move(img));
  }
  out.socle = kernel_of(out.kernel, images, total);

  // Split each soc(U_j) into its simple factors and compare the kernels of
  // the projections of soc(K), read off the conjugation action.
  std::vector<PermGroup> kernels;
  std::vector<std::pair<std::size_t, std::size_t>> labels;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    auto factors = minimal_normal_subgroups(soc[j], limits.structure_order, limits).subgroups;
    if (j == 0) out.socle_factors = factors.size();
    if (factors.size() != out.socle_factors) throw InvariantError("socle factor counts differ between blocks");
    Action restrict = restriction_action(out.socle, blocks[j]);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      Action conj = conjugation_action(soc[j], factors[i], limits);
      std::vector<Permutation> proj;
      for (const auto& x : out.socle.generators()) proj.push_back(conj(restrict(x)));
      kernels.push_back(kernel_of(out.socle, proj, conj.degree()));
      labels.emplace_back(i, j);
    }
  }
  for (const auto& cls : group_equal(kernels)) {
    std::vector<std::pair<std::size_t, std::size_t>> part;
    for (std::size_t c : cls) part.push_back(labels[c]);
    out.partition.push_back(std::move(part));
  }
  out.minimal = check_minimal_normal(g, out.socle, limits);
  return out;
}

std::optional<DescentWitness> descent_refinement(const PermGroup& g, const PermGroup& g0,
                                                 const PermGroup& g1, const PermGroup& n,
                                                 const Limits& limits) {
  if (!g.contains(g0) || !g0.contains(g1) || !g.contains(n))
    throw PreconditionError("expected g1 <= g0 <= g and n <= g");
  if (g0.order() == g.order() || g1.order() == g0.order())
    throw PreconditionError("expected g1 < g0 < g strictly");
  if (!type_c_socle(coset_action(g0, g1, limits).image(), limits))
    throw PreconditionError("g0 on g0/g1 is not primitive with a unique nonabelian minimal normal subgroup");
  Action act = coset_action(g, g0, limits);
  if (act.kernel().is_trivial()) throw PreconditionError("K = core(g0) is trivial");
  if (!check_minimal_normal(g, n, limits).minimal)
    throw PreconditionError("n is not a minimal normal subgroup of g");
  if (!kernel_of(n, mapped(act, n.generators()), act.degree()).is_trivial())
    throw PreconditionError("n meet K is nontrivial");

  DescentWitness w{join(g1, n), join(g0, n)};
  const bool ok = !(w.g1n == w.g0n) && !w.g1n.contains(g0) && !g0.contains(w.g1n);
  if (!ok) return std::nullopt;
  return w;
}

}  // namespace redspec
