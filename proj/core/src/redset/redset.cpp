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

#include "redspec/redset/redset.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "redspec/error.hpp"
#include "redspec/permcore/actions.hpp"
#include "redspec/permcore/normal.hpp"

namespace redspec {

MonodromyPair::MonodromyPair(PermGroup a, PermGroup g, BranchTuple tuple,
                             std::optional<std::size_t> infinity)
    : a_(std::move(a)), g_(std::move(g)), tuple_(std::move(tuple)), infinity_(infinity) {
  if (g_.degree() != a_.degree() || tuple_.degree() != a_.degree())
    throw ContractError("monodromy pair degrees differ");
  if (!a_.contains(g_) || !is_normal(a_, g_)) throw ContractError("G is not a normal subgroup of A");
  if (!(tuple_.group() == g_)) throw ContractError("branch tuple does not generate G");
  if (infinity_ && *infinity_ >= tuple_.size()) throw ContractError("infinity index out of range");
  if (g_.order() != a_.order()) quotient_solvable_ = is_solvable(coset_action(a_, g_).image());
}

MonodromyPair MonodromyPair::geometric(BranchTuple tuple, std::optional<std::size_t> infinity) {
  PermGroup g = tuple.group();
  return MonodromyPair(g, g, std::move(tuple), infinity);
}

namespace {

using Mask = std::uint32_t;

std::vector<Point> points_of(Mask m) {
  std::vector<Point> out;
  while (m) {
    out.push_back(static_cast<Point>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Mask apply(const Permutation& x, Mask m) {
  Mask out = 0;
  while (m) {
    out |= Mask{1} << x(static_cast<Point>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

// Colex ranks of k-subsets of {0..n-1}.
class SubsetRanker {
 public:
  explicit SubsetRanker(std::size_t n) : binom_(n + 1, std::vector<std::uint64_t>(n + 2, 0)) {
    for (std::size_t i = 0; i <= n; ++i) {
      binom_[i][0] = 1;
      for (std::size_t j = 1; j <= i; ++j) binom_[i][j] = binom_[i - 1][j - 1] + binom_[i - 1][j];
    }
  }
  std::uint64_t count(std::size_t n, std::size_t k) const { return binom_[n][k]; }
  std::uint64_t rank(Mask m) const {
    std::uint64_t r = 0;
    std::size_t i = 1;
    while (m) {
      r += binom_[static_cast<std::size_t>(std::countr_zero(m))][i++];
      m &= m - 1;
    }
    return r;
  }

 private:
  std::vector<std::vector<std::uint64_t>> binom_;
};

// Orbit representatives (smallest colex mask) of the k-subsets.
std::vector<Mask> subset_orbit_reps(const PermGroup& a, std::size_t k, const SubsetRanker& ranker) {
  const std::size_t n = a.degree();
  std::vector<bool> seen(ranker.count(n, k), false);
  std::vector<Mask> reps, queue;
  const Mask last = (k == 0) ? 0 : (((Mask{1} << k) - 1) << (n - k));
  for (Mask m = (Mask{1} << k) - 1;;) {
    if (!seen[ranker.rank(m)]) {
      reps.push_back(m);
      seen[ranker.rank(m)] = true;
      queue.assign(1, m);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const auto& x : a.generators()) {
          Mask y = apply(x, queue[i]);
          std::uint64_t r = ranker.rank(y);
          if (!seen[r]) {
            seen[r] = true;
            queue.push_back(y);
          }
        }
      }
    }
    if (m == last) break;
    Mask c = m & -m, r = m + c;  // next colex subset of the same size
    m = (((r ^ m) >> 2) / c) | r;
  }
  return reps;
}

// No union of D-orbits other than S and its complement has a larger
// stabilizer.
bool maximal_among_intransitive(const PermGroup& a, const PermGroup& d, Mask s, const Limits& limits) {
  const auto orbs = orbits(d);
  if (orbs.size() > 16) {
    throw ResourceError("intransitive_degree", 16,
                        "maximality test over unions of " + std::to_string(orbs.size()) + " orbits");
  }
  std::vector<Mask> orbit_masks;
  for (const auto& o : orbs) {
    Mask m = 0;
    for (Point p : o) m |= Mask{1} << p;
    orbit_masks.push_back(m);
  }
  const Mask all = a.degree() == 32 ? ~Mask{0} : ((Mask{1} << a.degree()) - 1);
  const std::uint32_t r = static_cast<std::uint32_t>(orbs.size());
  // Orbit 0 is kept outside T; T and its complement have the same stabilizer.
  for (std::uint32_t pick = 1; pick < (1u << r) / 2; ++pick) {
    Mask t = 0;
    for (std::uint32_t i = 0; i < r - 1; ++i) {
      if (pick & (1u << i)) t |= orbit_masks[i + 1];
    }
    if (t == s || t == (all & ~s)) continue;
    auto pts = points_of(t);
    if (set_stabilizer(a, pts, limits).order() > d.order()) return false;
  }
  return true;
}

}  // namespace

MaximalIntransitive maximal_intransitive(const PermGroup& a, const Limits& limits) {
  const std::size_t n = a.degree();
  if (n > limits.intransitive_degree || n > 31) {
    throw ResourceError("intransitive_degree", limits.intransitive_degree,
                        "subset sweep in degree " + std::to_string(n));
  }
  if (!is_transitive(a)) throw ContractError("maximal_intransitive needs a transitive group");
  SubsetRanker ranker(n);
  std::vector<PermGroup> found;
  for (std::size_t k = 1; k <= n / 2; ++k) {
    for (Mask s : subset_orbit_reps(a, k, ranker)) {
      PermGroup d = set_stabilizer(a, points_of(s), limits);
      if (std::any_of(found.begin(), found.end(), [&](const PermGroup& e) { return e == d; })) continue;
      if (maximal_among_intransitive(a, d, s, limits)) found.push_back(std::move(d));
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const PermGroup& x, const PermGroup& y) { return x.order() > y.order(); });
  MaximalIntransitive out;
  for (auto& d : found) {
    bool duplicate = false;
    for (const auto& e : out.classes) {
      if (e.order() != d.order()) continue;
      auto c = are_conjugate(a, e, d, limits);
      if (!c) {
        out.dedup_complete = false;
      } else if (*c) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) out.classes.push_back(std::move(d));
  }
  return out;
}

namespace {

// Stabilizer in g of point 0 under the action, i.e. D meet G when the
// action is on the cosets of D.
PermGroup stabilizer_of_coset(const PermGroup& g, const Action& act) {
  const std::size_t n = g.degree(), m = act.degree();
  std::vector<Permutation> gens;
  for (const auto& x : g.generators()) {
    Permutation y = act(x);
    std::vector<Point> img(n + m);
    for (std::size_t i = 0; i < n; ++i) img[i] = x(static_cast<Point>(i));
    for (std::size_t i = 0; i < m; ++i) img[n + i] = static_cast<Point>(n + y(static_cast<Point>(i)));
    gens.push_back(Permutation(std::move(img)));
  }
  PermGroup diag(n + m, gens);
  Point fixed[] = {static_cast<Point>(n)};
  PermGroup stab = pointwise_stabilizer(diag, fixed);
  std::vector<Point> first(n);
  for (std::size_t i = 0; i < n; ++i) first[i] = static_cast<Point>(i);
  return restriction_action(stab, first).image();
}

}  // namespace

RedSetReport red_candidates(const MonodromyPair& m, const Limits& limits) {
  RedSetReport report;
  report.degree = m.a().degree();
  MaximalIntransitive mi = maximal_intransitive(m.a(), limits);
  if (!mi.dedup_complete) report.notes.push_back("conjugacy dedup incomplete; classes may repeat");
  if (!m.quotient_solvable()) report.notes.push_back("A/G is not solvable");
  report.notes.push_back("finitely many exceptional t0 over discriminant roots are not computed");

  for (const auto& d : mi.classes) {
    Candidate c;
    c.d = d;
    Action act = coset_action(m.a(), d, limits);
    c.index = act.degree();
    c.dg_eq_a = join(d, m.g()).order() == m.a().order();
    c.cycle_types = action_cycle_types(m.tuple(), act);
    bool fixes_point = false;
    for (const auto& o : orbits(d)) fixes_point = fixes_point || o.size() == 1;
    if (c.dg_eq_a) {
      c.genus = action_genus(m.tuple(), act, limits);
      PermGroup dg = stabilizer_of_coset(m.g(), act);
      c.companion_genus = action_genus(m.tuple(), coset_action(m.g(), dg, limits), limits);
      if (*c.companion_genus != *c.genus) throw InvariantError("genus on A/D differs from genus on G/(D meet G)");
      if (m.infinity()) c.siegel = siegel_test(c.cycle_types[*m.infinity()], *c.genus);
    }
    if (fixes_point && c.index == m.a().degree()) {
      c.reason = "point stabilizer (the cover itself)";
    } else if (!c.dg_eq_a) {
      c.reason = "DG != A";
    } else if (*c.genus > 1) {
      c.reason = "genus " + std::to_string(*c.genus) + " > 1";
    }
    (c.reason.empty() ? report.candidates : report.excluded).push_back(std::move(c));
  }
  auto by_index = [](const Candidate& x, const Candidate& y) { return x.index < y.index; };
  std::stable_sort(report.candidates.begin(), report.candidates.end(), by_index);
  std::stable_sort(report.excluded.begin(), report.excluded.end(), by_index);
  return report;
}

namespace {

DirectFactorReport direct_factor(const PermGroup& a, const PermGroup& k, const Action& mod_k,
                                 const Limits& limits) {
  DirectFactorReport report;
  report.kernel = k;
  report.kernel_trivial = k.is_trivial();
  auto mins = minimal_normal_subgroups(a, limits.structure_order, limits);
  report.exhaustive = mins.exhaustive;
  const mpz_class qk = mod_k.image().order();
  for (const auto& n : mins.subgroups) {
    std::vector<Permutation> images;
    for (const auto& x : n.generators()) images.push_back(mod_k(x));
    if (!kernel_of(n, images, mod_k.degree()).is_trivial()) continue;
    DirectFactorEntry e;
    e.n = n;
    Action mod_n = coset_action(a, n, limits);
    e.quotient_by_n = mod_n.image().order();
    e.quotient_by_k = qk;
    const std::size_t dn = mod_n.degree(), dk = mod_k.degree();
    std::vector<Permutation> gens;
    for (const auto& x : a.generators()) {
      Permutation u = mod_n(x), v = mod_k(x);
      std::vector<Point> img(dn + dk);
      for (std::size_t i = 0; i < dn; ++i) img[i] = u(static_cast<Point>(i));
      for (std::size_t i = 0; i < dk; ++i) img[dn + i] = static_cast<Point>(dn + v(static_cast<Point>(i)));
      gens.push_back(Permutation(std::move(img)));
    }
    e.embedding_order = PermGroup(dn + dk, gens).order();
    const mpz_class product = e.quotient_by_n * e.quotient_by_k;
    e.verified = e.embedding_order == a.order() && mpz_divisible_p(product.get_mpz_t(), a.order().get_mpz_t());
    report.splitting = report.splitting || e.verified;
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace

DirectFactorReport direct_factor_test(const PermGroup& a, const std::vector<std::vector<Point>>& blocks,
                                      const Limits& limits) {
  Action act = block_action(a, blocks);
  return direct_factor(a, act.kernel(), act, limits);
}

DirectFactorReport direct_factor_test(const PermGroup& a, const PermGroup& k, const Limits& limits) {
  if (!a.contains(k) || !is_normal(a, k)) throw ContractError("K is not a normal subgroup of a");
  return direct_factor(a, k, coset_action(a, k, limits), limits);
}

bool galois_closure_match(const PermGroup& a, const PermGroup& d1, const PermGroup& d2,
                          const Limits& limits) {
  return core(a, d1, limits) == core(a, d2, limits);
}

}  // namespace redspec
