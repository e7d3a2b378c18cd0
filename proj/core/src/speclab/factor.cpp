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

#include "redspec/speclab/factor.hpp"

#include <algorithm>
#include <random>

#include "redspec/error.hpp"
#include "speclab/modular.hpp"

namespace redspec {

using modular::FpPoly;
using modular::ZPoly;

const char* to_string(FactorStatus s) {
  switch (s) {
    case FactorStatus::kIrreducibleCertified:
      return "irreducible-certified";
    case FactorStatus::kFactored:
      return "factored";
    case FactorStatus::kUnknown:
      return "unknown";
  }
  return "?";
}

namespace {

ZPoly to_z(const RatPoly& p) { return integer_form(p).ints; }

RatPoly to_rat(const ZPoly& z) { return from_integers(z); }

struct SquarefreePart {
  RatPoly poly;  // monic
  unsigned multiplicity;
};

// Yun's algorithm over Q.
std::vector<SquarefreePart> squarefree_decomposition(const RatPoly& f) {
  std::vector<SquarefreePart> out;
  RatPoly a = f.monic();
  RatPoly b = a.derivative();
  RatPoly c = gcd(a, b);
  RatPoly w = divmod(a, c).quotient;
  RatPoly y = divmod(b, c).quotient;
  RatPoly z = y - w.derivative();
  unsigned i = 1;
  while (w.degree() > 0) {
    RatPoly g = gcd(w, z);
    if (g.degree() > 0) out.push_back({g, i});
    w = divmod(w, g).quotient;
    y = divmod(z, g).quotient;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

struct GoodPrime {
  std::uint64_t p;
  FpPoly image;                  // monic
  std::vector<unsigned> degrees;  // of the irreducible factors mod p
};

// Good primes: p does not divide lc(f) and f mod p stays squarefree.
class PrimeStream {
 public:
  PrimeStream(const ZPoly& f, std::uint64_t start) : f_(f), next_(std::max<std::uint64_t>(start, 5)) {}

  std::optional<GoodPrime> next() {
    for (; next_ < (1ull << 31); ++next_) {
      const std::uint64_t p = next_;
      if (!modular::is_prime(p)) continue;
      FpPoly img = modular::reduce(f_, p);
      if (img.size() != f_.size()) continue;
      img = modular::fp_monic(img, p);
      if (modular::fp_gcd(img, modular::fp_derivative(img, p), p).size() != 1) continue;
      ++next_;
      GoodPrime g{p, img, {}};
      for (const auto& [h, d] : modular::distinct_degree(img, p))
        for (std::size_t k = 0; k < (h.size() - 1) / d; ++k) g.degrees.push_back(d);
      return g;
    }
    return std::nullopt;
  }

 private:
  const ZPoly& f_;
  std::uint64_t next_;
};

std::vector<bool> subset_sums(const std::vector<unsigned>& degrees, std::size_t n) {
  std::vector<bool> s(n + 1, false);
  s[0] = true;
  for (unsigned d : degrees)
    for (std::size_t v = n; v >= d; --v)
      if (s[v - d]) s[v] = true;
  return s;
}

struct PartResult {
  std::vector<ZPoly> factors;
  bool certified = false;
  std::string certificate;
};

mpz_class lifting_modulus(std::uint64_t p, const mpz_class& bound, unsigned& exponent) {
  mpz_class m = static_cast<unsigned long>(p);
  exponent = 1;
  while (m <= 2 * bound) {
    m *= m;
    exponent *= 2;
  }
  return m;
}

// Zassenhaus recombination over lifted monic factors; smallest subsets first,
// so each accepted candidate is irreducible.
std::vector<ZPoly> recombine(ZPoly f, std::vector<ZPoly> lifted, const mpz_class& m,
                             const std::vector<bool>& allowed) {
  std::vector<ZPoly> found;
  std::vector<unsigned> deg(lifted.size());
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    const std::size_t r = lifted.size();
    for (std::size_t i = 0; i < r; ++i) deg[i] = static_cast<unsigned>(lifted[i].size() - 1);
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    bool hit = false;
    while (true) {
      unsigned d = 0;
      for (auto i : idx) d += deg[i];
      if (d < allowed.size() && allowed[d]) {
        ZPoly g{f.back()};
        for (auto i : idx) g = modular::symmetric_mod(modular::z_mul(g, lifted[i]), m);
        g = modular::primitive_part(std::move(g));
        const bool trailing_ok = sgn(f[0]) == 0 || sgn(g[0]) == 0 ||
                                 mpz_divisible_p(f[0].get_mpz_t(), g[0].get_mpz_t());
        if (trailing_ok) {
          if (auto q = modular::exact_divide(f, g)) {
            found.push_back(std::move(g));
            f = modular::primitive_part(std::move(*q));
            for (std::size_t k = s; k-- > 0;) lifted.erase(lifted.begin() + idx[k]);
            hit = true;
            break;
          }
        }
      }
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == r - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!hit) ++s;
    deg.resize(lifted.size());
  }
  if (f.size() > 1) found.push_back(std::move(f));
  return found;
}

PartResult factor_squarefree(const ZPoly& f, const FactorOptions& options) {
  const std::size_t n = f.size() - 1;
  PartResult out;
  if (n == 1) {
    out.factors = {f};
    out.certified = true;
    out.certificate = "linear";
    return out;
  }
  PrimeStream primes(f, options.first_prime);
  std::vector<bool> allowed(n + 1, true);
  std::vector<GoodPrime> seen;
  std::string used;
  for (std::size_t k = 0; k < options.num_primes; ++k) {
    auto gp = primes.next();
    if (!gp) break;
    if (gp->degrees.size() == 1) {
      out.factors = {f};
      out.certified = true;
      out.certificate = "mod " + std::to_string(gp->p) + " irreducible";
      return out;
    }
    auto sums = subset_sums(gp->degrees, n);
    for (std::size_t d = 0; d <= n; ++d) allowed[d] = allowed[d] && sums[d];
    used += (used.empty() ? "" : ", ") + std::to_string(gp->p);
    seen.push_back(std::move(*gp));
    bool interior = false;
    for (std::size_t d = 1; d < n; ++d) interior = interior || allowed[d];
    if (!interior) {
      out.factors = {f};
      out.certified = true;
      out.certificate = "factor degrees mod " + used + " are incompatible";
      return out;
    }
  }
  if (seen.empty()) {
    out.factors = {f};
    out.certificate = "no good prime";
    return out;
  }
  const auto best = std::min_element(seen.begin(), seen.end(), [](const GoodPrime& a, const GoodPrime& b) {
    return a.degrees.size() < b.degrees.size();
  });
  if (best->degrees.size() > options.recombination_cap) {
    out.factors = {f};
    out.certificate = std::to_string(best->degrees.size()) + " factors mod " + std::to_string(best->p) +
                      " exceed the recombination cap";
    return out;
  }
  std::mt19937_64 rng(options.seed ^ (best->p * 0x9e3779b97f4a7c15ull));
  auto mod_factors = modular::factor_mod_p(best->image, best->p, rng);
  unsigned exponent = 0;
  const mpz_class m = lifting_modulus(best->p, modular::factor_coefficient_bound(f), exponent);
  auto lifted = modular::hensel_lift(f, mod_factors, best->p, m);
  out.factors = recombine(f, std::move(lifted), m, allowed);
  out.certified = true;
  out.certificate = "hensel mod " + std::to_string(best->p) + "^" + std::to_string(exponent) + ", " +
                    std::to_string(mod_factors.size()) + " modular factors";
  return out;
}

bool factor_less(const PolyFactor& a, const PolyFactor& b) {
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  const auto& x = a.poly.coefficients();
  const auto& y = b.poly.coefficients();
  for (std::size_t i = x.size(); i-- > 0;)
    if (x[i] != y[i]) return x[i] < y[i];
  return a.multiplicity < b.multiplicity;
}

}  // namespace

FactorizationResult factor_q(const RatPoly& f, const FactorOptions& options) {
  if (f.is_zero()) throw InputError("factor_q of the zero polynomial");
  if (f.degree() < 1) throw ContractError("factor_q needs degree at least 1");
  FactorizationResult out;
  bool all_certified = true;
  for (const auto& part : squarefree_decomposition(f)) {
    PartResult r = factor_squarefree(to_z(part.poly), options);
    all_certified = all_certified && r.certified;
    out.certificate.push_back(r.certificate);
    for (auto& z : r.factors) out.factors.push_back({to_rat(z), part.multiplicity, r.certified});
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  mpq_class lc_product = 1;
  for (const auto& pf : out.factors)
    for (unsigned i = 0; i < pf.multiplicity; ++i) lc_product *= pf.poly.leading();
  out.content = f.leading() / lc_product;
  if (!(expand(out) == f)) throw InvariantError("factor product differs from the input");
  if (!all_certified) {
    out.status = FactorStatus::kUnknown;
  } else if (out.factors.size() == 1 && out.factors[0].multiplicity == 1) {
    out.status = FactorStatus::kIrreducibleCertified;
  } else {
    out.status = FactorStatus::kFactored;
  }
  return out;
}

RatPoly expand(const FactorizationResult& r) {
  RatPoly acc = RatPoly::constant(r.content);
  for (const auto& pf : r.factors) acc = acc * power(pf.poly, pf.multiplicity);
  return acc;
}

std::vector<unsigned> factor_degrees(const FactorizationResult& r) {
  std::vector<unsigned> out;
  for (const auto& pf : r.factors)
    for (unsigned i = 0; i < pf.multiplicity; ++i) out.push_back(static_cast<unsigned>(pf.poly.degree()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

const mpz_class kSieveLimit("1000000000000");

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, unsigned>> primes;
  for (mpz_class d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      ++e;
    }
    if (e) primes.emplace_back(d, e);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [q, e] : primes) {
    const std::size_t base = out.size();
    mpz_class pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= q;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// sum f_i a^i b^(n-i) = 0.
bool is_root(const ZPoly& f, const mpz_class& a, const mpz_class& b) {
  mpz_class acc = 0, bpow = 1;
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * a + f[i] * bpow;
    bpow *= b;
  }
  return sgn(acc) == 0;
}

std::vector<mpq_class> sieve_roots(const ZPoly& f) {
  std::vector<mpq_class> out;
  for (const auto& a : divisors(f[0])) {
    for (const auto& b : divisors(f.back())) {
      if (gcd(a, b) != 1) continue;
      for (int sign : {1, -1}) {
        mpz_class num = sign * a;
        if (is_root(f, num, b)) out.emplace_back(num, b);
      }
    }
  }
  return out;
}

// Lifted linear factors mod a good prime, each tested exactly.
std::vector<mpq_class> modular_roots(const ZPoly& f) {
  std::vector<mpq_class> out;
  PrimeStream primes(f, 5);
  auto gp = primes.next();
  if (!gp) throw InvariantError("no good prime for root lifting");
  const std::uint64_t p = gp->p;
  std::mt19937_64 rng(p);
  auto factors = modular::factor_mod_p(gp->image, p, rng);
  std::vector<FpPoly> linear, pieces;
  FpPoly rest{1};
  for (auto& u : factors) {
    if (u.size() == 2) {
      linear.push_back(u);
    } else {
      rest = modular::fp_mul(rest, u, p);
    }
  }
  if (linear.empty()) return out;
  pieces = linear;
  if (rest.size() > 1) pieces.push_back(rest);
  unsigned exponent = 0;
  const mpz_class m = lifting_modulus(p, modular::factor_coefficient_bound(f), exponent);
  auto lifted = modular::hensel_lift(f, pieces, p, m);
  for (std::size_t i = 0; i < linear.size(); ++i) {
    ZPoly g = modular::symmetric_mod(modular::z_mul(ZPoly{f.back()}, lifted[i]), m);
    g = modular::primitive_part(std::move(g));
    if (g.size() != 2) continue;
    mpz_class num = -g[0], den = g[1];
    if (is_root(f, num, den)) out.emplace_back(num, den);
  }
  return out;
}

}  // namespace

std::vector<mpq_class> rational_roots(const RatPoly& f) {
  if (f.is_zero()) throw InputError("rational roots of the zero polynomial");
  ZPoly z = to_z(f);
  std::vector<mpq_class> out;
  if (sgn(z[0]) == 0) {
    out.emplace_back(0);
    std::size_t k = 0;
    while (sgn(z[k]) == 0) ++k;
    z.erase(z.begin(), z.begin() + k);
  }
  if (z.size() > 1) {
    std::vector<mpq_class> found;
    if (abs(z[0]) <= kSieveLimit && abs(z.back()) <= kSieveLimit) {
      found = sieve_roots(z);
    } else {
      RatPoly sq = to_rat(z);
      sq = divmod(sq, gcd(sq, sq.derivative())).quotient;
      found = modular_roots(to_z(sq));
    }
    for (auto& q : found) q.canonicalize();
    out.insert(out.end(), found.begin(), found.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ValueSetMembership value_set_member(const RatPoly& f1, const mpq_class& t0) {
  if (f1.degree() < 1) throw ContractError("value set of a constant polynomial");
  ValueSetMembership out;
  auto roots = rational_roots(f1 - RatPoly::constant(t0));
  if (!roots.empty()) {
    out.member = true;
    out.witness = *std::min_element(roots.begin(), roots.end(), [](const mpq_class& a, const mpq_class& b) {
      const int c = cmp(abs(a), abs(b));
      return c != 0 ? c < 0 : a > b;
    });
  }
  return out;
}

}  // namespace redspec
