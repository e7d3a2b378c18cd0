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

// Exhaustive polynomial references for small degrees and heights.

#include <optional>
#include <random>
#include <vector>

#include "redspec/speclab/rat_poly.hpp"

namespace oracle {

using redspec::RatPoly;

// Kronecker's method: a factor of degree d is pinned down by its values at
// d + 1 integers, each a divisor of the value of f there. Returns a proper
// factor, or nothing when f is irreducible over Q.
std::optional<RatPoly> kronecker_factor(const RatPoly& f);

// Every a/b with b dividing the leading coefficient and |a/b| under the
// Cauchy bound, tested by evaluation.
std::vector<mpq_class> brute_rational_roots(const RatPoly& f);

// Integer coefficients in [-height, height], nonzero leading coefficient.
RatPoly random_int_poly(int degree, long height, std::mt19937_64& rng);
// Fractions a/b with |a| <= height, 1 <= b <= height.
RatPoly random_rat_poly(int degree, long height, std::mt19937_64& rng);

}  // namespace oracle
