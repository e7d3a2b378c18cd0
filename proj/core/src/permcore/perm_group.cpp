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

#include "redspec/permcore/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

#include "redspec/error.hpp"

namespace redspec {

namespace {

// Levels whose orbit * degree is at most this many points keep explicit
// transversals; larger ones fall back to Schreier trees.
constexpr std::uint64_t kExplicitLevelBudget = std::uint64_t{1} << 21;

std::size_t smallest_moved(const Permutation& g) {
  for (std::size_t i = 0; i < g.degree(); ++i)
    if (g(static_cast<Point>(i)) != i) return i;
  return g.degree();
}

}  // namespace

StabChain::StabChain(std::size_t degree, std::span<const Permutation> generators,
                     std::span<const Point> base_prefix, const Limits& limits)
    : degree_(degree), limits_(limits) {
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw ContractError("generator degree " + std::to_string(g.degree()) +
                          " differs from group degree " + std::to_string(degree));
    }
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(g);
  }
  std::vector<Point> prefix;
  for (Point p : base_prefix) {
    if (p >= degree) throw ContractError("base point out of range");
    if (std::find(prefix.begin(), prefix.end(), p) == prefix.end()) prefix.push_back(p);
  }
  build(std::move(gens), std::move(prefix));
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base);
  return b;
}

mpz_class StabChain::order() const {
  mpz_class o = 1;
  for (const auto& l : levels_) o *= static_cast<unsigned long>(l.orbit.size());
  return o;
}

void StabChain::append_level(Point base) {
  Level l;
  l.base = base;
  levels_.push_back(std::move(l));
}

void StabChain::rebuild_level(std::size_t i) {
  Level& l = levels_[i];
  std::uint64_t old_entries = l.transversal.size() * 2 * degree_;
  l.orbit.assign(1, l.base);
  l.position.assign(degree_, -1);
  l.label.assign(degree_, -1);
  l.parent.assign(degree_, 0);
  l.position[l.base] = 0;
  for (std::size_t head = 0; head < l.orbit.size(); ++head) {
    Point a = l.orbit[head];
    for (std::size_t gi = 0; gi < l.generators.size(); ++gi) {
      Point b = l.generators[gi](a);
      if (l.position[b] < 0) {
        l.position[b] = static_cast<std::int32_t>(l.orbit.size());
        l.label[b] = static_cast<std::int32_t>(gi);
        l.parent[b] = a;
        l.orbit.push_back(b);
      }
    }
  }
  l.transversal.clear();
  l.transversal_inv.clear();
  stored_entries_ -= std::min(stored_entries_, old_entries);
  std::uint64_t need = static_cast<std::uint64_t>(l.orbit.size()) * degree_;
  if (need <= kExplicitLevelBudget &&
      stored_entries_ + 2 * need <= limits_.transversal_entries) {
    l.transversal.reserve(l.orbit.size());
    l.transversal.emplace_back(degree_);
    for (std::size_t k = 1; k < l.orbit.size(); ++k) {
      Point b = l.orbit[k];
      const Permutation& up = l.transversal[static_cast<std::size_t>(l.position[l.parent[b]])];
      l.transversal.push_back(up * l.generators[static_cast<std::size_t>(l.label[b])]);
    }
    l.transversal_inv.reserve(l.orbit.size());
    for (const auto& u : l.transversal) l.transversal_inv.push_back(u.inverse());
    stored_entries_ += 2 * need;
  }
}

Permutation StabChain::transversal(std::size_t level, Point p) const {
  const Level& l = levels_[level];
  if (l.position[p] < 0) throw ContractError("point not in basic orbit");
  if (!l.transversal.empty()) return l.transversal[static_cast<std::size_t>(l.position[p])];
  std::vector<std::int32_t> path;
  for (Point x = p; x != l.base; x = l.parent[x]) path.push_back(l.label[x]);
  Permutation u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    u *= l.generators[static_cast<std::size_t>(*it)];
  return u;
}

Permutation StabChain::transversal_inverse(std::size_t level, Point p) const {
  const Level& l = levels_[level];
  if (!l.transversal_inv.empty() && l.position[p] >= 0)
    return l.transversal_inv[static_cast<std::size_t>(l.position[p])];
  return transversal(level, p).inverse();
}

StabChain::Sift StabChain::sift(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    Point beta = g(l.base);
    if (l.position[beta] < 0) return {std::move(g), i};
    if (beta == l.base) continue;
    if (!l.transversal_inv.empty()) {
      g *= l.transversal_inv[static_cast<std::size_t>(l.position[beta])];
    } else {
      g *= transversal_inverse(i, beta);
    }
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto s = sift(g);
  return s.level == levels_.size() && s.residue.is_identity();
}

void StabChain::build(std::vector<Permutation> gens, std::vector<Point> prefix) {
  for (Point p : prefix) append_level(p);
  auto fixes_base = [&](const Permutation& g, std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
      if (g(levels_[i].base) != levels_[i].base) return false;
    return true;
  };
  for (const auto& g : gens) {
    if (fixes_base(g, levels_.size())) append_level(static_cast<Point>(smallest_moved(g)));
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : gens)
      if (fixes_base(g, i)) levels_[i].generators.push_back(g);
    rebuild_level(i);
  }

  // Sims' deterministic verification loop: every Schreier generator of every
  // level must sift to the identity through the levels below it.
  std::int64_t i = static_cast<std::int64_t>(levels_.size()) - 1;
  while (i >= 0) {
    const auto ui = static_cast<std::size_t>(i);
    bool restarted = false;
    for (std::size_t k = 0; k < levels_[ui].orbit.size() && !restarted; ++k) {
      for (std::size_t gi = 0; gi < levels_[ui].generators.size(); ++gi) {
        const Level& l = levels_[ui];
        Point beta = l.orbit[k];
        const Permutation& x = l.generators[gi];
        Point img = x(beta);
        if (l.label[img] == static_cast<std::int32_t>(gi) && l.parent[img] == beta) continue;
        Permutation g = transversal(ui, beta) * x * transversal_inverse(ui, img);
        if (g.is_identity()) continue;
        auto [h, j] = sift(std::move(g), ui + 1);
        if (j == levels_.size() && h.is_identity()) continue;
        if (j == levels_.size()) append_level(static_cast<Point>(smallest_moved(h)));
        for (std::size_t m = ui + 1; m <= j; ++m) {
          levels_[m].generators.push_back(h);
          rebuild_level(m);
        }
        i = static_cast<std::int64_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
  // Drop trailing trivial levels that only came from the prefix.
  while (!levels_.empty() && levels_.back().orbit.size() == 1 &&
         levels_.back().generators.empty() && levels_.size() > prefix.size())
    levels_.pop_back();
}

std::vector<Permutation> StabChain::stabilizer_generators(std::size_t level) const {
  if (level >= levels_.size()) return {};
  return levels_[level].generators;
}

std::uint64_t StabChain::index_of(const Permutation& g) const {
  std::uint64_t index = 0, radix = 1;
  Permutation h = g;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    Point beta = h(l.base);
    auto pos = l.position[beta];
    if (pos < 0) throw ContractError("element is not in the group");
    index += radix * static_cast<std::uint64_t>(pos);
    radix *= l.orbit.size();
    if (beta != l.base) h *= transversal_inverse(i, beta);
  }
  if (!h.is_identity()) throw ContractError("element is not in the group");
  return index;
}

Permutation StabChain::element_at(std::uint64_t index) const {
  std::vector<std::size_t> digits(levels_.size());
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    digits[i] = index % levels_[i].orbit.size();
    index /= levels_[i].orbit.size();
  }
  Permutation g(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;) {
    if (digits[i] != 0) g *= transversal(i, levels_[i].orbit[digits[i]]);
  }
  return g;
}

Permutation StabChain::random_element(std::mt19937_64& rng) const {
  Permutation g(degree_);
  for (std::size_t i = levels_.size(); i-- > 0;) {
    std::uniform_int_distribution<std::size_t> pick(0, levels_[i].orbit.size() - 1);
    std::size_t d = pick(rng);
    if (d != 0) g *= transversal(i, levels_[i].orbit[d]);
  }
  return g;
}

struct PermGroup::Cache {
  std::once_flag once;
  std::unique_ptr<StabChain> chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) {
      throw InputError("generator " + g.to_string() + " has degree " +
                       std::to_string(g.degree()) + ", expected " + std::to_string(degree_));
    }
  }
}

const StabChain& PermGroup::chain() const {
  std::call_once(cache_->once,
                 [this] { cache_->chain = std::make_unique<StabChain>(degree_, generators_); });
  return *cache_->chain;
}

PermGroup PermGroup::symmetric(std::size_t n) {
  if (n < 2) return trivial(n);
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>(i);
  return PermGroup(n, {Permutation::from_cycles(n, {cyc}), Permutation::from_cycles(n, {{0, 1}})});
}

PermGroup PermGroup::alternating(std::size_t n) {
  if (n < 3) return trivial(n);
  std::vector<Point> cyc;
  for (std::size_t i = (n % 2 == 1 ? 0 : 1); i < n; ++i) cyc.push_back(static_cast<Point>(i));
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
  if (n > 3) gens.push_back(Permutation::from_cycles(n, {cyc}));
  return PermGroup(n, std::move(gens));
}

PermGroup PermGroup::cyclic(std::size_t n) {
  if (n < 2) return trivial(n);
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>(i);
  return PermGroup(n, {Permutation::from_cycles(n, {cyc})});
}

PermGroup PermGroup::dihedral(std::size_t n) {
  if (n < 3) return symmetric(n);
  std::vector<Point> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    refl[i] = static_cast<Point>((n - i) % n);
  }
  return PermGroup(n, {Permutation(rot), Permutation(refl)});
}

std::uint64_t PermGroup::order_u64() const {
  mpz_class o = order();
  if (o >= (mpz_class(1) << 63)) {
    throw ResourceError("uint64 group order", UINT64_MAX >> 1,
                        "group order " + o.get_str() + " exceeds 63 bits");
  }
  return o.get_ui();
}

bool PermGroup::contains(const PermGroup& sub) const {
  if (sub.degree() != degree_) return false;
  for (const auto& g : sub.generators())
    if (!contains(g)) return false;
  return true;
}

bool PermGroup::is_trivial() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Permutation& g) { return g.is_identity(); });
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
  return true;
}

std::vector<Permutation> PermGroup::elements(const Limits& limits) const {
  mpz_class o = order();
  if (o > mpz_class(std::to_string(limits.element_enumeration))) {
    throw ResourceError("element_enumeration", limits.element_enumeration,
                        "group of order " + o.get_str() + " is too large to enumerate");
  }
  std::vector<Permutation> out;
  const auto n = o.get_ui();
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(chain().element_at(i));
  return out;
}

std::vector<Permutation> PermGroup::reduced_generators() const {
  std::vector<Permutation> pool = generators_;
  for (const auto& s : chain().strong_generators()) pool.push_back(s);
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  const mpz_class target = order();
  std::vector<Permutation> kept;
  mpz_class current = 1;
  for (const auto& g : pool) {
    if (current == target) break;
    if (g.is_identity()) continue;
    std::vector<Permutation> trial = kept;
    trial.push_back(g);
    StabChain c(degree_, trial);
    if (c.order() > current) {
      kept = std::move(trial);
      current = c.order();
    }
  }
  return kept;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && a.contains(b);
}

PermGroup make_subgroup(const PermGroup& parent, std::vector<Permutation> generators) {
  for (const auto& g : generators) {
    if (g.degree() != parent.degree() || !parent.contains(g)) {
      throw ContractError("subgroup generator " + g.to_string() + " is not in the parent group");
    }
  }
  return PermGroup(parent.degree(), std::move(generators));
}

PermGroup join(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw ContractError("joining groups of different degree");
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return PermGroup(a.degree(), std::move(gens));
}

PermGroup pointwise_stabilizer(const PermGroup& g, std::span<const Point> points) {
  if (points.empty()) return g;
  StabChain c(g.degree(), g.generators(), points);
  std::vector<Point> prefix(points.begin(), points.end());
  std::sort(prefix.begin(), prefix.end());
  prefix.erase(std::unique(prefix.begin(), prefix.end()), prefix.end());
  return PermGroup(g.degree(), c.stabilizer_generators(prefix.size()));
}

std::vector<Point> orbit(const PermGroup& g, Point p) {
  std::vector<Point> out{p};
  std::vector<bool> seen(g.degree(), false);
  seen[p] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (const auto& s : g.generators()) {
      Point q = s(out[head]);
      if (!seen[q]) {
        seen[q] = true;
        out.push_back(q);
      }
    }
  return out;
}

std::vector<std::vector<Point>> orbits(std::size_t degree,
                                       std::span<const Permutation> generators) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree, false);
  for (std::size_t start = 0; start < degree; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orb{static_cast<Point>(start)};
    seen[start] = true;
    for (std::size_t head = 0; head < orb.size(); ++head)
      for (const auto& s : generators) {
        Point q = s(orb[head]);
        if (!seen[q]) {
          seen[q] = true;
          orb.push_back(q);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  return orbits(g.degree(), g.generators());
}

bool is_transitive(const PermGroup& g) {
  return g.degree() <= 1 || orbit(g, 0).size() == g.degree();
}

Permutation shifted(const Permutation& x, std::size_t offset, std::size_t degree) {
  if (offset + x.degree() > degree) throw ContractError("shifted permutation exceeds degree");
  std::vector<Point> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < x.degree(); ++i)
    img[offset + i] = static_cast<Point>(offset + x(static_cast<Point>(i)));
  return Permutation(std::move(img));
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& x : a.generators()) gens.push_back(shifted(x, 0, n));
  for (const auto& y : b.generators()) gens.push_back(shifted(y, a.degree(), n));
  return PermGroup(n, std::move(gens));
}

}  // namespace redspec
