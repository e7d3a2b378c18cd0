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

#include "redspec/permcore/actions.hpp"

#include <algorithm>
#include <unordered_map>

#include "permcore/hash.hpp"
#include "redspec/error.hpp"

namespace redspec {

const char* to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::kNatural: return "natural";
    case ActionKind::kCoset: return "coset";
    case ActionKind::kTwoSet: return "two-set";
    case ActionKind::kBlock: return "block";
    case ActionKind::kProduct: return "product";
    case ActionKind::kOther: return "other";
  }
  return "other";
}

Action::Action(PermGroup source, std::size_t degree, ActionKind kind, Mapper map)
    : source_(std::move(source)), degree_(degree), kind_(kind), map_(std::move(map)) {
  images_.reserve(source_.generators().size());
  for (const auto& g : source_.generators()) images_.push_back(map_(g));
}

PermGroup Action::kernel() const { return kernel_of(source_, images_, degree_); }

Action natural_action(const PermGroup& g) {
  return Action(g, g.degree(), ActionKind::kNatural, [](const Permutation& x) { return x; });
}

std::size_t two_set_index(Point i, Point j) {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(j) * (j - 1) / 2 + i;
}

Action two_set_action(const PermGroup& g) {
  const std::size_t n = g.degree();
  const std::size_t m = n * (n - 1) / 2;
  return Action(g, m, ActionKind::kTwoSet, [n, m](const Permutation& x) {
    std::vector<Point> img(m);
    for (Point j = 1; j < n; ++j)
      for (Point i = 0; i < j; ++i)
        img[two_set_index(i, j)] = static_cast<Point>(two_set_index(x(i), x(j)));
    return Permutation(std::move(img));
  });
}

Action block_action(const PermGroup& g, const std::vector<std::vector<Point>>& blocks) {
  const std::size_t n = g.degree();
  auto block_of = std::make_shared<std::vector<std::int32_t>>(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw ContractError("empty block");
    for (Point p : blocks[b]) {
      if (p >= n || (*block_of)[p] != -1) throw ContractError("blocks do not partition the points");
      (*block_of)[p] = static_cast<std::int32_t>(b);
    }
  }
  if (std::find(block_of->begin(), block_of->end(), -1) != block_of->end())
    throw ContractError("blocks do not cover the points");
  for (const auto& s : g.generators())
    for (const auto& blk : blocks) {
      std::int32_t target = (*block_of)[s(blk.front())];
      for (Point p : blk)
        if ((*block_of)[s(p)] != target) throw ContractError("partition is not g-invariant");
    }
  auto reps = std::make_shared<std::vector<Point>>();
  for (const auto& blk : blocks) reps->push_back(blk.front());
  return Action(g, blocks.size(), ActionKind::kBlock, [block_of, reps](const Permutation& x) {
    std::vector<Point> img(reps->size());
    for (std::size_t b = 0; b < reps->size(); ++b)
      img[b] = static_cast<Point>((*block_of)[x((*reps)[b])]);
    return Permutation(std::move(img));
  });
}

Action restriction_action(const PermGroup& g, std::vector<Point> invariant_set) {
  auto where = std::make_shared<std::vector<std::int32_t>>(g.degree(), -1);
  for (std::size_t i = 0; i < invariant_set.size(); ++i) {
    if (invariant_set[i] >= g.degree() || (*where)[invariant_set[i]] != -1)
      throw ContractError("invalid invariant set");
    (*where)[invariant_set[i]] = static_cast<std::int32_t>(i);
  }
  auto pts = std::make_shared<std::vector<Point>>(std::move(invariant_set));
  Action::Mapper map = [where, pts](const Permutation& x) {
    std::vector<Point> img(pts->size());
    for (std::size_t i = 0; i < pts->size(); ++i) {
      std::int32_t j = (*where)[x((*pts)[i])];
      if (j < 0) throw ContractError("element does not preserve the invariant set");
      img[i] = static_cast<Point>(j);
    }
    return Permutation(std::move(img));
  };
  return Action(g, pts->size(), ActionKind::kOther, std::move(map));
}

Action conjugation_action(const PermGroup& g, const PermGroup& target, const Limits& limits) {
  const mpz_class order = target.order();
  if (order > limits.simple_factor_elements) {
    throw ResourceError("simple_factor_elements", limits.simple_factor_elements,
                        "conjugation action on " + order.get_str() + " elements");
  }
  const std::uint64_t n = order.get_ui();
  auto elems = std::make_shared<std::vector<Permutation>>();
  elems->reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) elems->push_back(target.chain().element_at(i));
  PermGroup t = target;
  Action::Mapper map = [elems, t](const Permutation& x) {
    std::vector<Point> img(elems->size());
    for (std::size_t i = 0; i < elems->size(); ++i) {
      Permutation y = (*elems)[i].conjugate_by(x);
      if (!t.contains(y)) throw ContractError("element does not normalize the target subgroup");
      img[i] = static_cast<Point>(t.chain().index_of(y));
    }
    return Permutation(std::move(img));
  };
  return Action(g, n, ActionKind::kOther, std::move(map));
}

namespace {

// Right cosets S x of S in G, keyed by a canonical coset element: the member
// of S x whose images of S's base are lexicographically least, found level
// by level through S's stabilizer chain.
class CosetTable {
 public:
  CosetTable(const PermGroup& g, const PermGroup& s, const Limits& limits)
      : g_(g), s_(s), g_base_(g.chain().base()) {
    if (g.degree() != s.degree()) throw ContractError("subgroup degree differs from group degree");
    for (const auto& x : s.generators())
      if (!g.contains(x)) throw ContractError("s is not a subgroup of g: " + x.to_string());
    mpz_class index = g.order() / s.order();
    if (index > limits.coset_index) {
      throw ResourceError("coset_index", limits.coset_index,
                          "coset action of index " + index.get_str());
    }
    reps_.push_back(Permutation::identity(g.degree()));
    index_.emplace(key(reps_[0]), 0);
    for (std::size_t head = 0; head < reps_.size(); ++head)
      for (const auto& x : g.generators()) {
        Permutation y = reps_[head] * x;
        auto k = key(y);
        if (index_.find(k) == index_.end()) {
          index_.emplace(std::move(k), static_cast<Point>(reps_.size()));
          reps_.push_back(std::move(y));
        }
      }
  }

  std::size_t size() const { return reps_.size(); }
  const std::vector<Permutation>& representatives() const { return reps_; }

  Permutation act(const Permutation& x) const {
    std::vector<Point> img(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      auto it = index_.find(key(reps_[i] * x));
      if (it == index_.end()) throw ContractError("element is not in the acting group");
      img[i] = it->second;
    }
    return Permutation(std::move(img));
  }

 private:
  std::vector<Point> key(Permutation y) const {
    const StabChain& c = s_.chain();
    for (std::size_t l = 0; l < c.depth(); ++l) {
      const auto& lev = c.level(l);
      Point best = lev.orbit.front();
      for (Point gamma : lev.orbit)
        if (y(gamma) < y(best)) best = gamma;
      if (best != lev.base) y = c.transversal(l, best) * y;
    }
    std::vector<Point> k;
    k.reserve(g_base_.size());
    for (Point b : g_base_) k.push_back(y(b));
    return k;
  }

  PermGroup g_, s_;
  std::vector<Point> g_base_;
  std::vector<Permutation> reps_;
  std::unordered_map<std::vector<Point>, Point, detail::PointVectorHash> index_;
};

}  // namespace

Action coset_action(const PermGroup& g, const PermGroup& s, const Limits& limits) {
  auto table = std::make_shared<CosetTable>(g, s, limits);
  return Action(g, table->size(), ActionKind::kCoset,
                [table](const Permutation& x) { return table->act(x); });
}

std::vector<Permutation> right_coset_representatives(const PermGroup& g, const PermGroup& s,
                                                     const Limits& limits) {
  return CosetTable(g, s, limits).representatives();
}

PermGroup kernel_of(const PermGroup& g, std::span<const Permutation> images,
                    std::size_t image_degree) {
  const std::size_t n = g.degree();
  const std::size_t total = n + image_degree;
  if (images.size() != g.generators().size())
    throw ContractError("one image per generator is required");
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].degree() != image_degree) throw ContractError("image degree mismatch");
    std::vector<Point> img(total);
    for (std::size_t p = 0; p < n; ++p) img[p] = g.generators()[i](static_cast<Point>(p));
    for (std::size_t p = 0; p < image_degree; ++p)
      img[n + p] = static_cast<Point>(n + images[i](static_cast<Point>(p)));
    gens.emplace_back(std::move(img));
  }
  // Stabilize action points one at a time; every round removes at least a
  // factor of two from the order.
  for (;;) {
    Point moved = static_cast<Point>(total);
    for (const auto& x : gens)
      for (std::size_t p = n; p < total && p < moved; ++p)
        if (x(static_cast<Point>(p)) != p) {
          moved = static_cast<Point>(p);
          break;
        }
    if (moved == total) break;
    const Point prefix[] = {moved};
    StabChain c(total, gens, prefix);
    gens = c.stabilizer_generators(1);
  }
  std::vector<Permutation> out;
  for (const auto& x : gens) {
    std::vector<Point> img(x.images().begin(), x.images().begin() + n);
    Permutation r(std::move(img));
    if (!r.is_identity()) out.push_back(std::move(r));
  }
  return PermGroup(n, std::move(out));
}

namespace {

struct SubsetOrbit {
  std::vector<std::vector<Point>> sets;
  std::vector<std::int32_t> parent;
  std::vector<std::int32_t> label;
  std::unordered_map<std::vector<Point>, std::uint32_t, detail::PointVectorHash> index;
};

std::vector<Point> image_set(const Permutation& x, const std::vector<Point>& s) {
  std::vector<Point> out;
  out.reserve(s.size());
  for (Point p : s) out.push_back(x(p));
  std::sort(out.begin(), out.end());
  return out;
}

SubsetOrbit subset_orbit(const PermGroup& g, std::span<const Point> subset,
                         const Limits& limits) {
  std::vector<Point> start(subset.begin(), subset.end());
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());
  for (Point p : start)
    if (p >= g.degree()) throw ContractError("subset point out of range");
  SubsetOrbit orb;
  orb.index.emplace(start, 0);
  orb.sets.push_back(std::move(start));
  orb.parent.push_back(-1);
  orb.label.push_back(-1);
  const auto& gens = g.generators();
  for (std::size_t head = 0; head < orb.sets.size(); ++head)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto img = image_set(gens[k], orb.sets[head]);
      if (orb.index.find(img) != orb.index.end()) continue;
      if (orb.sets.size() >= limits.subset_orbit) {
        throw ResourceError("subset_orbit", limits.subset_orbit,
                            "subset orbit exceeds the limit");
      }
      orb.index.emplace(img, static_cast<std::uint32_t>(orb.sets.size()));
      orb.sets.push_back(std::move(img));
      orb.parent.push_back(static_cast<std::int32_t>(head));
      orb.label.push_back(static_cast<std::int32_t>(k));
    }
  return orb;
}

Permutation path_element(const PermGroup& g, const SubsetOrbit& orb, std::uint32_t t) {
  Permutation u = Permutation::identity(g.degree());
  while (orb.parent[t] >= 0) {
    u = g.generators()[orb.label[t]] * u;
    t = static_cast<std::uint32_t>(orb.parent[t]);
  }
  return u;
}

}  // namespace

std::uint64_t subset_orbit_length(const PermGroup& g, std::span<const Point> subset,
                                  const Limits& limits) {
  return subset_orbit(g, subset, limits).sets.size();
}

PermGroup set_stabilizer(const PermGroup& g, std::span<const Point> subset,
                         const Limits& limits) {
  SubsetOrbit orb = subset_orbit(g, subset, limits);
  if (orb.sets.size() == 1) return g;
  const mpz_class target = g.order() / mpz_class(static_cast<unsigned long>(orb.sets.size()));
  GroupBuilder stab(g.degree());
  const auto& gens = g.generators();
  for (std::uint32_t t = 0; t < orb.sets.size() && stab.order() < target; ++t) {
    Permutation u = path_element(g, orb, t);
    for (std::size_t k = 0; k < gens.size() && stab.order() < target; ++k) {
      auto img = image_set(gens[k], orb.sets[t]);
      std::uint32_t t2 = orb.index.at(img);
      if (orb.parent[t2] == static_cast<std::int32_t>(t) &&
          orb.label[t2] == static_cast<std::int32_t>(k))
        continue;
      Permutation schreier = u * gens[k] * path_element(g, orb, t2).inverse();
      stab.add(schreier);
    }
  }
  if (stab.order() != target) throw InvariantError("set stabilizer order mismatch");
  return stab.group();
}

GroupBuilder::GroupBuilder(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  chain_ = std::make_unique<StabChain>(degree_, generators_);
}

bool GroupBuilder::add(const Permutation& g) {
  if (chain_->contains(g)) return false;
  generators_.push_back(g);
  chain_ = std::make_unique<StabChain>(degree_, generators_);
  return true;
}

}  // namespace redspec
