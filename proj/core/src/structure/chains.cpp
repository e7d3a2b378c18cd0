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

#include "redspec/structure/chains.hpp"

#include "redspec/error.hpp"
#include "redspec/permcore/actions.hpp"
#include "redspec/permcore/blocks.hpp"
#include "redspec/permcore/normal.hpp"
#include "redspec/structure/quotients.hpp"

namespace redspec {

namespace {

bool is_prime_power(std::size_t n) {
  if (n < 2) return false;
  std::size_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

void require_same_group(const ChainSpec& h, const PermGroup& u) {
  if (u.degree() != h.group().degree() || !h.group().contains(u))
    throw ContractError("u is not a subgroup of the chain group");
}

}  // namespace

ChainSpec::ChainSpec(PermGroup g, std::vector<PermGroup> ascending)
    : group_(std::move(g)), chain_(std::move(ascending)) {
  if (!chain_.empty() && chain_.back().degree() == group_.degree() &&
      chain_.back().order() == group_.order() && group_.contains(chain_.back())) {
    chain_.back() = group_;
  } else {
    chain_.push_back(group_);
  }
  for (std::size_t i = 1; i < chain_.size(); ++i) {
    const PermGroup& a = chain_[i - 1];
    const PermGroup& b = chain_[i];
    if (a.degree() != b.degree()) throw ContractError("chain degrees differ");
    if (!b.contains(a))
      throw ContractError("chain entry " + std::to_string(i - 1) + " is not contained in entry " +
                          std::to_string(i));
    if (a.order() == b.order())
      throw ContractError("chain containment " + std::to_string(i - 1) + " < " +
                          std::to_string(i) + " is not strict");
  }
  cache_.resize(chain_.size());
}

ChainSpec ChainSpec::from_text(const GroupText& text) {
  std::vector<PermGroup> subs;
  for (const auto& gens : text.subgroups) subs.emplace_back(text.degree, gens);
  return ChainSpec(text.group(), std::move(subs));
}

const StepClass& ChainSpec::step(std::size_t i, const Limits& limits) const {
  if (i == 0 || i > length()) throw ContractError("chain step out of range");
  if (!cache_[i]) cache_[i] = classify_step(chain_[i], chain_[i - 1], i, limits);
  return *cache_[i];
}

std::vector<StepClass> ChainSpec::steps(const Limits& limits) const {
  std::vector<StepClass> out;
  for (std::size_t i = 1; i <= length(); ++i) out.push_back(step(i, limits));
  return out;
}

StepClass classify_step(const PermGroup& upper, const PermGroup& lower, std::size_t step,
                        const Limits& limits) {
  StepClass s;
  s.step = step;
  s.index = upper.order() / lower.order();
  s.image = coset_action(upper, lower, limits).image();
  s.maximal = is_primitive(s.image);
  s.solvable = is_solvable(s.image);
  if (s.solvable) {
    s.affine = s.maximal;
    s.quotient_free = true;
  } else {
    if (s.maximal && is_prime_power(s.image.degree())) {
      auto mins = minimal_normal_subgroups(s.image, limits.structure_order, limits);
      for (const auto& m : mins.subgroups) s.affine = s.affine || m.is_abelian();
      s.exact = mins.exhaustive;
    }
    QuotientCheck q = check_no_nonsolvable_proper_quotient(s.image, limits);
    s.quotient_free = q.value;
    s.exact = s.exact && q.exact;
  }
  return s;
}

const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::kCertified: return "transitive certified";
    case VerdictStatus::kHypothesisViolated: return "hypothesis violated";
    case VerdictStatus::kBeyondLemma: return "beyond-lemma";
  }
  return "?";
}

bool transitive_on_cosets(const PermGroup& g, const PermGroup& h0, const PermGroup& u,
                          const Limits& limits) {
  if (!g.contains(u)) throw ContractError("u is not a subgroup of g");
  Action act = coset_action(g, h0, limits);
  std::vector<Permutation> images;
  for (const auto& x : u.generators()) images.push_back(act(x));
  return orbits(act.degree(), images).size() == 1;
}

namespace {

std::string step_name(const char* chain, std::size_t i) {
  return std::string(chain) + "-chain step " + std::to_string(i);
}

void finish(TransitivityVerdict& v, const ChainSpec& h, const PermGroup& u, const Limits& limits) {
  v.direct_transitive = transitive_on_cosets(h.group(), h.bottom(), u, limits);
  if (v.status == VerdictStatus::kCertified && !v.direct_transitive) {
    throw InvariantError("certified transitivity contradicted by direct orbit computation");
  }
}

}  // namespace

TransitivityVerdict transitive_by_solvable_quotient(const ChainSpec& h, const ChainSpec& u,
                                                    const Limits& limits) {
  if (!(u.group() == h.group())) throw ContractError("chains over different groups");
  TransitivityVerdict v;
  v.h_steps = h.steps(limits);
  v.u_steps = u.steps(limits);
  for (const auto& s : v.h_steps) {
    if (!s.maximal) {
      v.violation = step_name("H", s.step) + ": lower subgroup not maximal";
    } else if (s.solvable) {
      v.violation = step_name("H", s.step) + ": action is solvable";
    }
    if (!v.violation.empty()) break;
  }
  if (v.violation.empty()) {
    for (const auto& s : v.u_steps) {
      if (!s.maximal) {
        v.violation = step_name("u", s.step) + ": lower subgroup not maximal";
      } else if (!s.solvable) {
        v.violation = step_name("u", s.step) + ": action is nonsolvable";
      }
      if (!v.violation.empty()) break;
    }
  }
  v.status = v.violation.empty() ? VerdictStatus::kCertified : VerdictStatus::kHypothesisViolated;
  finish(v, h, u.bottom(), limits);
  return v;
}

TransitivityVerdict transitive_by_solvable_quotient(const ChainSpec& h, const PermGroup& u,
                                                    const Limits& limits) {
  require_same_group(h, u);
  TransitivityVerdict v;
  v.h_steps = h.steps(limits);
  for (const auto& s : v.h_steps) {
    if (!s.maximal) {
      v.violation = step_name("H", s.step) + ": lower subgroup not maximal";
    } else if (s.solvable) {
      v.violation = step_name("H", s.step) + ": action is solvable";
    }
    if (!v.violation.empty()) break;
  }
  if (v.violation.empty() && u.order() != h.group().order()) {
    StepClass s = classify_step(h.group(), u, 1, limits);
    if (!s.solvable) v.violation = "u: G acts nonsolvably on G/u";
    v.u_steps.push_back(std::move(s));
  }
  v.status = v.violation.empty() ? VerdictStatus::kCertified : VerdictStatus::kHypothesisViolated;
  finish(v, h, u, limits);
  return v;
}

TransitivityVerdict transitive_by_affine_chain(const ChainSpec& h, const ChainSpec& u,
                                               const AffineOptions& options,
                                               const Limits& limits) {
  if (!(u.group() == h.group())) throw ContractError("chains over different groups");
  TransitivityVerdict v;
  v.h_steps = h.steps(limits);
  v.u_steps = u.steps(limits);
  for (const auto& s : v.h_steps) {
    if (!s.maximal) {
      v.violation = step_name("H", s.step) + ": lower subgroup not maximal";
    } else if (s.solvable) {
      v.violation = step_name("H", s.step) + ": action is solvable";
    } else if (!s.quotient_free) {
      v.violation = step_name("H", s.step) + ": step image has a nontrivial nonsolvable quotient";
    }
    if (!v.violation.empty()) break;
  }
  if (v.violation.empty()) {
    for (const auto& s : v.u_steps) {
      if (!s.maximal) {
        v.violation = step_name("u", s.step) + ": lower subgroup not maximal";
      } else if (!s.affine) {
        v.violation = step_name("u", s.step) + ": step image is not affine";
      }
      if (!v.violation.empty()) break;
    }
  }
  bool beyond = false;
  if (v.violation.empty()) {
    std::vector<PermGroup> kernels;
    for (std::size_t i = 0; i < h.length(); ++i) kernels.push_back(core(h.group(), h.at(i), limits));
    for (std::size_t i = 0; i < kernels.size() && v.violation.empty() && !beyond; ++i) {
      for (std::size_t j = i + 1; j < kernels.size(); ++j) {
        if (kernels[i] == kernels[j]) {
          if (options.require_kernel_distinctness) {
            v.violation = "block kernels: core(H_" + std::to_string(i) + ") = core(H_" +
                          std::to_string(j) + ")";
          } else {
            beyond = true;
          }
          break;
        }
      }
    }
  }
  if (!v.violation.empty()) {
    v.status = VerdictStatus::kHypothesisViolated;
  } else {
    v.status = beyond ? VerdictStatus::kBeyondLemma : VerdictStatus::kCertified;
  }
  finish(v, h, u.bottom(), limits);
  return v;
}

}  // namespace redspec
