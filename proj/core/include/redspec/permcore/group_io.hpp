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

#include <string>
#include <string_view>
#include <vector>

#include "redspec/permcore/perm_group.hpp"

namespace redspec {

// Text form shared by group, tuple and chain files:
//
//   # comment
//   degree 4
//   (1 2 3 4)
//   (1 3)
//   subgroup: (1 3); (2 4)
//
// Generator lines are 1-indexed cycle notation, "()" is the identity.
// "subgroup:" lines (chain files only) list generators separated by ';' and
// appear in ascending chain order; an empty list is the trivial group.
struct GroupText {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<std::vector<Permutation>> subgroups;

  PermGroup group() const { return PermGroup(degree, generators); }
};

// ParseError with line and column on malformed input.
GroupText parse_group_text(std::string_view text);
GroupText read_group_file(const std::string& path);
std::string format_group_text(const GroupText& g);

// Reads a whole file; InputError when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace redspec
