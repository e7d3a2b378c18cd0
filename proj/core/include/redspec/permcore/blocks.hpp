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

#include <vector>

#include "redspec/permcore/perm_group.hpp"

namespace redspec {

// A partition of the points; blocks sorted ascending, ordered by first point.
using BlockSystem = std::vector<std::vector<Point>>;

// Finest invariant partition in which a and b share a block, by the
// union-find pair-merging procedure. May be the single-block partition.
BlockSystem minimal_block_system(const PermGroup& g, Point a, Point b);

// All minimal nontrivial block systems of a transitive group: the seeded
// systems for every pair {0, b}, minus the universal one, minus any system
// strictly coarser than another. Empty iff g is primitive.
// ContractError for intransitive input.
std::vector<BlockSystem> block_systems(const PermGroup& g);

bool is_primitive(const PermGroup& g);
bool is_block_system(const PermGroup& g, const BlockSystem& blocks);
// True if every block of fine lies inside a block of coarse.
bool refines(const BlockSystem& fine, const BlockSystem& coarse);

}  // namespace redspec
