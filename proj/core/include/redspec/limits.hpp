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

#include <cstddef>
#include <cstdint>

namespace redspec {

// Resource caps shared by all modules. Exceeding any of them raises
// ResourceError naming the field; nothing silently degrades.
struct Limits {
  // Largest index [G:S] for which cosets are enumerated.
  std::uint64_t coset_index = 200'000;
  // Largest orbit of point subsets explored by set_stabilizer.
  std::uint64_t subset_orbit = 1'000'000;
  // Largest group whose elements may be enumerated (conjugacy classes etc.).
  std::uint64_t element_enumeration = 2'000'000;
  // Largest group for socle(); class representatives are used when the
  // group is also under element_enumeration, sampled elements otherwise.
  std::uint64_t small_group = 10'000'000;
  // Order cap for the structure and redset engines, which locate minimal
  // normal subgroups by sampled normal closures above small_group.
  double structure_order = 1e16;
  // Largest degree of a product-action wreath product or image.
  std::uint64_t product_degree = 1'000'000;
  // Upper bound on stored transversal entries (points) per stabilizer chain.
  std::uint64_t transversal_entries = 60'000'000;
  // Largest degree for the full k-subset sweep of maximal_intransitive.
  std::uint64_t intransitive_degree = 30;
  // Largest index for brute-force subgroup conjugacy tests.
  std::uint64_t conjugacy_test_index = 10'000;
  // Number of sampled elements when classes are not available.
  std::uint32_t normal_samples = 64;
  // Largest simple factor whose elements are enumerated for projections.
  std::uint64_t simple_factor_elements = 50'000;

  static const Limits& defaults();
};

}  // namespace redspec
