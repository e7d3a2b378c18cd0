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

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "redspec/redset/redset.hpp"

namespace oracle {

using redspec::WreathScanClass;
using redspec::WreathScanResult;

// (category, class size, index), category 0/1/2 for element orders 2/4/5.
using ScanKey = std::tuple<int, std::string, std::uint64_t>;
std::vector<ScanKey> scan_keys(const WreathScanResult& r);

// Flagged triples as sorted (index2, index4, index5, sizes...).
using TripleKey = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, std::string, std::string, std::string>;
std::vector<TripleKey> flagged_keys(const std::vector<WreathScanClass>& c2, const std::vector<WreathScanClass>& c4,
                                    const std::vector<WreathScanClass>& c5, std::uint64_t degree);
// The same keys read off a scan result.
std::vector<TripleKey> flagged_keys(const WreathScanResult& r);

// Generic class enumeration on the imprimitive group S_k wr S_5, then the
// product action of each representative. Classes only; flagged is left empty.
WreathScanResult wreath_scan_by_classes(unsigned k);

}  // namespace oracle
