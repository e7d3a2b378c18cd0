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
#include <optional>
#include <string>
#include <vector>

#include "redspec/speclab/rat_poly.hpp"

namespace redspec {

enum class FactorStatus { kIrreducibleCertified, kFactored, kUnknown };
const char* to_string(FactorStatus s);

struct FactorOptions {
  std::size_t num_primes = 25;         // good primes examined per squarefree part
  std::size_t recombination_cap = 12;  // most modular factors handed to recombination
  std::uint64_t first_prime = 5;       // search for good primes starts here (at least 5)
  std::uint64_t seed = 0;              // equal-degree splitting
};

struct PolyFactor {
  RatPoly poly;  // primitive integer coefficients, positive leading coefficient
  unsigned multiplicity = 1;
  bool irreducible = false;  // false: not certified, possibly reducible
};

struct FactorizationResult {
  FactorStatus status = FactorStatus::kUnknown;
  mpq_class content;  // input = content * prod poly^multiplicity
  std::vector<PolyFactor> factors;  // by degree, then coefficients
  // "mod 7 irreducible", "degrees mod 5, 11", "hensel mod 13^k", ... one
  // entry per squarefree part.
  std::vector<std::string> certificate;
};

// InputError on the zero polynomial. The product of the factors is checked
// against the input (InvariantError on mismatch), and no squarefree part is
// reported irreducible without a mod-p or recombination certificate.
FactorizationResult factor_q(const RatPoly& f, const FactorOptions& options = {});
RatPoly expand(const FactorizationResult& r);
// Degrees repeated by multiplicity, ascending.
std::vector<unsigned> factor_degrees(const FactorizationResult& r);

// Rational roots of the integer-cleared polynomial by the divisor sieve on
// the constant and leading coefficients, ascending. Coefficients beyond
// 10^12 switch to lifting roots of f mod p.
std::vector<mpq_class> rational_roots(const RatPoly& f);

struct ValueSetMembership {
  bool member = false;
  std::optional<mpq_class> witness;  // q with f1(q) = t0, least |q|, positive on ties
};
// ContractError when deg f1 < 1.
ValueSetMembership value_set_member(const RatPoly& f1, const mpq_class& t0);

}  // namespace redspec
