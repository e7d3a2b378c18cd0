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

#include <optional>
#include <string>
#include <vector>

#include "redspec/speclab/factor.hpp"
#include "redspec/speclab/rat_poly.hpp"

namespace redspec {

// Specialization values t0: an integer interval, or the fractions a/b with
// |a| <= height and 1 <= b <= denominators, listed by height max(|a|, b) and
// then by value, each once in lowest terms.
class ScanWindow {
 public:
  static ScanWindow integers(long lo, long hi);
  static ScanWindow grid(unsigned long height, unsigned long denominators);

  std::vector<mpq_class> points() const;
  std::string describe() const;

 private:
  bool grid_ = false;
  long lo_ = 0, hi_ = -1;
  unsigned long height_ = 0, denominators_ = 0;
};

enum class Reducibility { kReducible, kIrreducible, kUnknown };
const char* to_string(Reducibility r);

struct ScanRecord {
  mpq_class t0;
  Reducibility reducible = Reducibility::kUnknown;
  bool in_value_set = false;
  std::optional<mpq_class> witness;  // f1(witness) = t0
  bool discriminant_point = false;    // f - t0 has a repeated root
  // factor_q gave no verdict but the value-set identity supplies a divisor.
  bool reducible_by_identity = false;
  FactorizationResult factorization;
  std::vector<unsigned> factor_degrees;
};

struct ScanReport {
  std::string window;
  RatPoly f, f1;
  std::vector<ScanRecord> records;  // in window order
  std::size_t hits = 0;             // reducible records
  std::size_t unknowns = 0;
  std::size_t discriminant_points = 0;
  // Reducible, outside the f1 value set, not a discriminant point.
  std::vector<mpq_class> exceptions;
  std::vector<std::string> notes;
};

struct ScanOptions {
  unsigned threads = 1;
  FactorOptions factor;
};

// f = chain[0] o ... o chain[r-1]; f1 = chain[0] o ... o chain[f1_index-1].
// ContractError for an empty chain, a constant member or f1_index outside
// [1, r]. InvariantError if a value-set point is certified irreducible while
// deg f1 >= 2.
ScanReport scan_window(const std::vector<RatPoly>& chain, std::size_t f1_index, const ScanWindow& window,
                       const ScanOptions& options = {});

}  // namespace redspec
