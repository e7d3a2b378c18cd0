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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "redspec/limits.hpp"
#include "redspec/permcore/group_io.hpp"
#include "redspec/permcore/perm_group.hpp"

namespace redspec {

// How H_i acts on the cosets of H_{i-1}.
struct StepClass {
  std::size_t step = 0;  // i, 1-based
  mpz_class index;
  bool maximal = false;   // image primitive
  bool solvable = false;
  bool affine = false;    // primitive with abelian socle
  bool quotient_free = false;  // no nontrivial nonsolvable quotient
  bool exact = true;      // false if the socle or quotient scan was sampled
  PermGroup image;
};

// H_0 < H_1 < ... < H_r = group. Steps are classified lazily and cached.
class ChainSpec {
 public:
  // `ascending` lists H_0, ..., H_{r-1}; a trailing copy of g is dropped.
  // ContractError unless every containment is strict and every generator
  // lies in the next group.
  ChainSpec(PermGroup g, std::vector<PermGroup> ascending);
  // Group from the generator lines, chain from the subgroup lines.
  static ChainSpec from_text(const GroupText& text);

  const PermGroup& group() const { return group_; }
  std::size_t length() const { return chain_.size() - 1; }  // r
  const PermGroup& at(std::size_t i) const { return chain_.at(i); }  // H_i
  const PermGroup& bottom() const { return chain_.front(); }

  const StepClass& step(std::size_t i, const Limits& limits = Limits::defaults()) const;
  std::vector<StepClass> steps(const Limits& limits = Limits::defaults()) const;

 private:
  PermGroup group_;
  std::vector<PermGroup> chain_;
  mutable std::vector<std::optional<StepClass>> cache_;
};

StepClass classify_step(const PermGroup& upper, const PermGroup& lower, std::size_t step,
                        const Limits& limits = Limits::defaults());

enum class VerdictStatus { kCertified, kHypothesisViolated, kBeyondLemma };
const char* to_string(VerdictStatus s);

struct TransitivityVerdict {
  VerdictStatus status = VerdictStatus::kHypothesisViolated;
  std::string violation;  // names the failing step, empty when certified
  bool direct_transitive = false;  // u on the cosets of H_0, by orbits
  std::vector<StepClass> h_steps;
  std::vector<StepClass> u_steps;
};

// u transitive on G/H_0 when every H-step is maximal with nonsolvable
// action and u is reached from G by maximal steps with solvable action.
TransitivityVerdict transitive_by_solvable_quotient(const ChainSpec& h, const ChainSpec& u,
                                                    const Limits& limits = Limits::defaults());
// Overload for a bare subgroup: a maximal chain from u to G with solvable
// steps exists iff G acts solvably on G/u, which is what gets checked.
TransitivityVerdict transitive_by_solvable_quotient(const ChainSpec& h, const PermGroup& u,
                                                    const Limits& limits = Limits::defaults());

struct AffineOptions {
  // When false, pairwise distinct block kernels are not required and a
  // verdict that would need them is tagged kBeyondLemma.
  bool require_kernel_distinctness = true;
};

// u transitive on G/H_0 when every H-step is maximal, nonsolvable, with no
// nontrivial nonsolvable quotient, every u-step is affine, and the cores of
// H_0, ..., H_{r-1} in G are pairwise distinct.
TransitivityVerdict transitive_by_affine_chain(const ChainSpec& h, const ChainSpec& u,
                                               const AffineOptions& options = {},
                                               const Limits& limits = Limits::defaults());

// Orbit computation: is u transitive on the right cosets of h0 in g.
bool transitive_on_cosets(const PermGroup& g, const PermGroup& h0, const PermGroup& u,
                          const Limits& limits = Limits::defaults());

}  // namespace redspec
