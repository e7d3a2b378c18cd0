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

#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "redspec/limits.hpp"
#include "redspec/permcore/perm_group.hpp"

namespace redspec {

enum class ActionKind { kNatural, kCoset, kTwoSet, kBlock, kProduct, kOther };

const char* to_string(ActionKind kind);

// A homomorphism from a permutation group into Sym(degree), given by a rule
// that maps any element of the source group.
class Action {
 public:
  using Mapper = std::function<Permutation(const Permutation&)>;

  Action(PermGroup source, std::size_t degree, ActionKind kind, Mapper map);

  const PermGroup& source() const { return source_; }
  std::size_t degree() const { return degree_; }
  ActionKind kind() const { return kind_; }
  Permutation operator()(const Permutation& g) const { return map_(g); }
  // Images of source().generators(), in order.
  const std::vector<Permutation>& generator_images() const { return images_; }
  PermGroup image() const { return PermGroup(degree_, images_); }
  PermGroup kernel() const;

 private:
  PermGroup source_;
  std::size_t degree_;
  ActionKind kind_;
  Mapper map_;
  std::vector<Permutation> images_;
};

Action natural_action(const PermGroup& g);
// Action on unordered pairs {i < j}, pair index j*(j-1)/2 + i.
Action two_set_action(const PermGroup& g);
std::size_t two_set_index(Point i, Point j);
// Action on the blocks of an invariant partition (block order as given).
Action block_action(const PermGroup& g, const std::vector<std::vector<Point>>& blocks);
// Right-multiplication action on the right cosets S x. Coset 0 is S itself,
// so its point stabilizer is S. ResourceError when [G:S] > limits.coset_index.
Action coset_action(const PermGroup& g, const PermGroup& s,
                    const Limits& limits = Limits::defaults());
// One representative per right coset S x, coset 0 represented by the identity.
std::vector<Permutation> right_coset_representatives(const PermGroup& g, const PermGroup& s,
                                                     const Limits& limits = Limits::defaults());

// Restriction to a g-invariant point set; point i of the image is
// invariant_set[i]. ContractError if some generator moves the set.
Action restriction_action(const PermGroup& g, std::vector<Point> invariant_set);
// Conjugation action of g on the elements of a subgroup it normalizes,
// points numbered by the chain index of `target`. ResourceError above
// limits.simple_factor_elements elements.
Action conjugation_action(const PermGroup& g, const PermGroup& target,
                          const Limits& limits = Limits::defaults());

// Kernel of the homomorphism sending g.generators()[i] to images[i] in
// Sym(image_degree). The images must define a homomorphism.
PermGroup kernel_of(const PermGroup& g, std::span<const Permutation> images,
                    std::size_t image_degree);

// {x in G : x(subset) = subset}, from the orbit of the subset with Schreier
// generators. ResourceError when the subset orbit exceeds limits.subset_orbit.
PermGroup set_stabilizer(const PermGroup& g, std::span<const Point> subset,
                         const Limits& limits = Limits::defaults());
// Number of distinct images of the subset under g.
std::uint64_t subset_orbit_length(const PermGroup& g, std::span<const Point> subset,
                                  const Limits& limits = Limits::defaults());

// Grows a subgroup one generator at a time, keeping a current chain.
class GroupBuilder {
 public:
  explicit GroupBuilder(std::size_t degree, std::vector<Permutation> generators = {});
  // Adds g unless it is already a member; returns true if the group grew.
  bool add(const Permutation& g);
  bool contains(const Permutation& g) const { return chain_->contains(g); }
  mpz_class order() const { return chain_->order(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  PermGroup group() const { return PermGroup(degree_, generators_); }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::unique_ptr<StabChain> chain_;
};

}  // namespace redspec
