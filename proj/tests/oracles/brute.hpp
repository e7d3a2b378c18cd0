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

// Naive reference computations used to cross-check the library. Everything
// here works on explicit element lists and is only meant for small groups.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "redspec/permcore/permutation.hpp"

namespace oracle {

using redspec::Partition;
using redspec::Permutation;
using redspec::Point;

// Every element of <gens>, by closing under right multiplication.
std::set<Permutation> closure(std::size_t degree, const std::vector<Permutation>& gens);

std::vector<Permutation> random_permutations(std::size_t degree, std::size_t count,
                                             std::mt19937_64& rng);

// Orbits of a set of elements on points, sorted.
std::vector<std::vector<Point>> point_orbits(std::size_t degree,
                                             const std::set<Permutation>& elements);

bool is_normal(const std::set<Permutation>& g, const std::set<Permutation>& n);

// All normal subgroups, by closing products of conjugacy classes.
std::vector<std::set<Permutation>> normal_subgroups(const std::set<Permutation>& g);

// Minimal nontrivial normal subgroups.
std::vector<std::set<Permutation>> minimal_normal_subgroups(const std::set<Permutation>& g);

// Conjugacy classes, each sorted.
std::vector<std::vector<Permutation>> conjugacy_classes(const std::set<Permutation>& g);

// All partitions of {0..n-1} invariant under every element.
std::vector<std::vector<std::vector<Point>>> invariant_partitions(
    std::size_t n, const std::vector<Permutation>& gens);

// Cycle type on unordered pairs of a permutation with the given cycle type,
// by following each pair around its orbit.
Partition two_set_type(const Partition& type);

// Riemann-Hurwitz from explicit tuple entries.
std::int64_t genus_of_tuple(const std::vector<Permutation>& tuple);

}  // namespace oracle
