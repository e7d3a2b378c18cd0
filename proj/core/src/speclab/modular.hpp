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

// Polynomials over Z/p and Z/m used by the factoring engine. Coefficients
// ascending, trimmed; p is an odd prime below 2^31.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace redspec::modular {

using FpPoly = std::vector<std::uint64_t>;
using ZPoly = std::vector<mpz_class>;

bool is_prime(std::uint64_t n);

FpPoly reduce(const ZPoly& f, std::uint64_t p);
FpPoly fp_monic(FpPoly f, std::uint64_t p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly fp_sub(FpPoly a, const FpPoly& b, std::uint64_t p);
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p);  // monic
FpPoly fp_derivative(const FpPoly& f, std::uint64_t p);
// s, t with s a + t b = 1; a and b coprime.
std::pair<FpPoly, FpPoly> fp_bezout(const FpPoly& a, const FpPoly& b, std::uint64_t p);

// Products of the irreducible factors of each degree, f monic squarefree.
std::vector<std::pair<FpPoly, unsigned>> distinct_degree(const FpPoly& f, std::uint64_t p);
// Monic irreducible factors of a product of degree-d irreducibles.
std::vector<FpPoly> equal_degree(const FpPoly& f, unsigned d, std::uint64_t p, std::mt19937_64& rng);
// All monic irreducible factors of f monic squarefree, sorted.
std::vector<FpPoly> factor_mod_p(const FpPoly& f, std::uint64_t p, std::mt19937_64& rng);

// Lifts monic pairwise coprime factors with f = lc(f) * prod mod p to the
// same identity mod m, m a power of p. Returns monic factors mod m.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<FpPoly>& factors, std::uint64_t p,
                               const mpz_class& m);

// Exact quotient of a by b in Z[x], if any.
std::optional<ZPoly> exact_divide(const ZPoly& a, const ZPoly& b);
ZPoly primitive_part(ZPoly f);  // positive leading coefficient
ZPoly symmetric_mod(ZPoly f, const mpz_class& m);
ZPoly z_mul(const ZPoly& a, const ZPoly& b);
// Bound on the coefficients of lc(f) * g / lc(g) for any factor g of f.
mpz_class factor_coefficient_bound(const ZPoly& f);

}  // namespace redspec::modular
