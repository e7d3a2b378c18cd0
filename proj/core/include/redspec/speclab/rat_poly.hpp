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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace redspec {

// Univariate polynomial over Q, coefficients ascending. Trailing zeros are
// always trimmed, so the zero polynomial has no coefficients and degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> coefficients);
  RatPoly(std::initializer_list<long> coefficients);

  static RatPoly constant(const mpq_class& c);
  static RatPoly x();
  static RatPoly monomial(const mpq_class& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Zero beyond the degree.
  mpq_class coeff(std::size_t i) const;
  const std::vector<mpq_class>& coefficients() const { return c_; }
  const mpq_class& leading() const;  // ContractError on zero

  mpq_class operator()(const mpq_class& t) const;
  RatPoly derivative() const;
  RatPoly monic() const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const mpq_class& s);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator-(const RatPoly& a);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const mpq_class& s) { return a *= s; }
  friend RatPoly operator*(const mpq_class& s, RatPoly a) { return a *= s; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpq_class> c_;
};

struct PolyDivision {
  RatPoly quotient, remainder;
};

// ContractError when b is zero.
PolyDivision divmod(const RatPoly& a, const RatPoly& b);
// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);
RatPoly power(const RatPoly& p, unsigned e);

// g(h(x)).
RatPoly compose(const RatPoly& g, const RatPoly& h);
// f_1(f_2(...f_r(x))); x for an empty chain.
RatPoly compose_chain(const std::vector<RatPoly>& chain);

// T_0 = 2, T_1 = x, T_{n+1} = x T_n - T_{n-1}.
RatPoly chebyshev(unsigned n);

// Integer coefficients and their scale: p = scale * ints, with the integer
// polynomial primitive and its leading coefficient positive.
struct IntegerForm {
  std::vector<mpz_class> ints;
  mpq_class scale;
};
IntegerForm integer_form(const RatPoly& p);  // ContractError on zero
RatPoly from_integers(const std::vector<mpz_class>& ints);

// Canonical text, descending: "x^4 - 4*x^2 + 2", "3/2*x - 1", "0".
std::string to_string(const RatPoly& p);
// Accepts the canonical form plus free spacing and an optional '*'.
// ParseError with the 1-based column on failure.
RatPoly parse_poly(std::string_view text);
// One polynomial per nonblank line, '#' starts a comment. ParseError carries
// the line number.
std::vector<RatPoly> parse_chain(std::string_view text);

// Splits deg f = outer * inner with both at least 2.
struct DecompositionSplit {
  unsigned outer_degree = 0;
  unsigned inner_degree = 0;
  // f = g(h) with h monic and h(0) = 0; empty when no such pair exists over Q.
  std::optional<std::pair<RatPoly, RatPoly>> parts;
};

// One entry per nontrivial factorization of the degree, by inner degree.
// ContractError when deg f < 2.
std::vector<DecompositionSplit> decompose(const RatPoly& f);
bool is_indecomposable(const RatPoly& f);

}  // namespace redspec
