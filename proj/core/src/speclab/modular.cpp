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

#include "speclab/modular.hpp"

#include <algorithm>

#include "redspec/error.hpp"

namespace redspec::modular {

namespace {

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

void trim(ZPoly& f) {
  while (!f.empty() && sgn(f.back()) == 0) f.pop_back();
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw InvariantError("inverse of zero mod p");
  return powmod(a, p - 2, p);
}

FpPoly fp_rem(const FpPoly& a, const FpPoly& b, std::uint64_t p) { return fp_divmod(a, b, p).second; }

FpPoly fp_powmod(FpPoly base, const mpz_class& e, const FpPoly& mod, std::uint64_t p) {
  FpPoly r{1};
  base = fp_rem(base, mod, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = fp_rem(fp_mul(r, r, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_rem(fp_mul(r, base, p), mod, p);
  }
  return r;
}

ZPoly z_add(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

ZPoly z_sub(ZPoly a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

ZPoly z_mod(ZPoly a, const mpz_class& m) {
  for (auto& v : a) {
    v %= m;
    if (sgn(v) < 0) v += m;
  }
  trim(a);
  return a;
}

// b monic.
std::pair<ZPoly, ZPoly> z_divmod_monic(ZPoly a, const ZPoly& b, const mpz_class& m) {
  a = z_mod(std::move(a), m);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {ZPoly{}, a};
  ZPoly q(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    mpz_class c = a[i] % m;
    if (sgn(c) < 0) c += m;
    q[i - db] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  a.resize(db);
  return {z_mod(std::move(q), m), z_mod(std::move(a), m)};
}

ZPoly lift(const FpPoly& f) { return ZPoly(f.begin(), f.end()); }

FpPoly product(const std::vector<FpPoly>& fs, std::size_t lo, std::size_t hi, std::uint64_t p) {
  FpPoly r{1};
  for (std::size_t i = lo; i < hi; ++i) r = fp_mul(r, fs[i], p);
  return r;
}

// One quadratic lifting step: f = g h mod m, s g + t h = 1 mod m, h monic,
// all updated to hold mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const mpz_class& m2) {
  ZPoly e = z_mod(z_sub(f, z_mul(g, h)), m2);
  auto [q, r] = z_divmod_monic(z_mul(s, e), h, m2);
  ZPoly g2 = z_mod(z_add(z_add(g, z_mul(t, e)), z_mul(q, g)), m2);
  ZPoly h2 = z_mod(z_add(h, r), m2);
  ZPoly b = z_mod(z_sub(z_add(z_mul(s, g2), z_mul(t, h2)), ZPoly{1}), m2);
  auto [c, d] = z_divmod_monic(z_mul(s, b), h2, m2);
  s = z_mod(z_sub(s, d), m2);
  t = z_mod(z_sub(z_sub(t, z_mul(t, b)), z_mul(c, g2)), m2);
  g = std::move(g2);
  h = std::move(h2);
}

void lift_into(const ZPoly& f, const std::vector<FpPoly>& factors, std::size_t lo, std::size_t hi,
               std::uint64_t p, const mpz_class& m, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    mpz_class inv;
    mpz_class lc = f.back() % m;
    if (sgn(lc) < 0) lc += m;
    if (mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), m.get_mpz_t()) == 0)
      throw InvariantError("leading coefficient not invertible during lifting");
    ZPoly monic = f;
    for (auto& v : monic) v *= inv;
    out[lo] = z_mod(std::move(monic), m);
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const std::uint64_t lc = reduce(ZPoly{f.back()}, p).at(0);
  FpPoly g0 = fp_mul(FpPoly{lc}, product(factors, lo, mid, p), p);
  FpPoly h0 = product(factors, mid, hi, p);
  auto [s0, t0] = fp_bezout(g0, h0, p);
  ZPoly g = lift(g0), h = lift(h0), s = lift(s0), t = lift(t0);
  mpz_class mod = p;
  while (mod < m) {
    mod *= mod;
    hensel_step(z_mod(f, mod), g, h, s, t, mod);
  }
  if (mod != m) throw InvariantError("lifting modulus is not p^(2^j)");
  lift_into(g, factors, lo, mid, p, m, out);
  lift_into(h, factors, mid, hi, p, m, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FpPoly reduce(const ZPoly& f, std::uint64_t p) {
  FpPoly out(f.size());
  const mpz_class pp = static_cast<unsigned long>(p);
  for (std::size_t i = 0; i < f.size(); ++i) {
    mpz_class v = f[i] % pp;
    if (sgn(v) < 0) v += pp;
    out[i] = v.get_ui();
  }
  trim(out);
  return out;
}

FpPoly fp_monic(FpPoly f, std::uint64_t p) {
  if (f.empty()) return f;
  const std::uint64_t inv = inverse(f.back(), p);
  for (auto& v : f) v = mulmod(v, inv, p);
  return f;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  trim(out);
  return out;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, std::uint64_t p) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (b.empty()) throw InvariantError("division by zero polynomial mod p");
  if (a.size() < b.size()) return {FpPoly{}, a};
  FpPoly r = a;
  const std::size_t db = b.size() - 1;
  FpPoly q(a.size() - db, 0);
  const std::uint64_t inv = inverse(b.back(), p);
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    const std::uint64_t c = mulmod(r[i], inv, p);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + p - mulmod(c, b[j], p)) % p;
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(std::move(a), p);
}

FpPoly fp_derivative(const FpPoly& f, std::uint64_t p) {
  if (f.size() <= 1) return {};
  FpPoly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = mulmod(f[i], i % p, p);
  trim(d);
  return d;
}

std::pair<FpPoly, FpPoly> fp_bezout(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  // Invariant: r0 = s0 a + t0 b, r1 = s1 a + t1 b.
  FpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fp_divmod(r0, r1, p);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw InvariantError("bezout inputs are not coprime mod p");
  const FpPoly inv{inverse(r0[0], p)};
  return {fp_mul(s0, inv, p), fp_mul(t0, inv, p)};
}

std::vector<std::pair<FpPoly, unsigned>> distinct_degree(const FpPoly& f, std::uint64_t p) {
  std::vector<std::pair<FpPoly, unsigned>> out;
  FpPoly rest = f;
  const FpPoly x{0, 1};
  FpPoly h = x;
  unsigned i = 0;
  while (rest.size() - 1 >= 2 * (i + 1)) {
    ++i;
    h = fp_powmod(h, mpz_class(static_cast<unsigned long>(p)), rest, p);
    FpPoly g = fp_gcd(fp_sub(h, x, p), rest, p);
    if (g.size() > 1) {
      out.emplace_back(g, i);
      rest = fp_divmod(rest, g, p).first;
      h = fp_rem(h, rest, p);
    }
  }
  if (rest.size() > 1) out.emplace_back(fp_monic(rest, p), static_cast<unsigned>(rest.size() - 1));
  return out;
}

std::vector<FpPoly> equal_degree(const FpPoly& f, unsigned d, std::uint64_t p, std::mt19937_64& rng) {
  const std::size_t n = f.size() - 1;
  if (n == d) return {fp_monic(f, p)};
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  while (true) {
    FpPoly a(n);
    for (auto& v : a) v = coeff(rng);
    trim(a);
    if (a.size() <= 1) continue;
    FpPoly g = fp_gcd(a, f, p);
    if (g.size() == 1) g = fp_gcd(fp_sub(fp_powmod(a, e, f, p), FpPoly{1}, p), f, p);
    if (g.size() > 1 && g.size() < f.size()) {
      auto left = equal_degree(g, d, p, rng);
      auto right = equal_degree(fp_divmod(f, g, p).first, d, p, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<FpPoly> factor_mod_p(const FpPoly& f, std::uint64_t p, std::mt19937_64& rng) {
  std::vector<FpPoly> out;
  for (const auto& [g, d] : distinct_degree(fp_monic(f, p), p)) {
    auto pieces = equal_degree(g, d, p, rng);
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<FpPoly>& factors, std::uint64_t p,
                               const mpz_class& m) {
  std::vector<ZPoly> out(factors.size());
  if (factors.empty()) return out;
  lift_into(f, factors, 0, factors.size(), p, m, out);
  return out;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

std::optional<ZPoly> exact_divide(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw InvariantError("exact division by zero");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  ZPoly r = a;
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db);
  for (std::size_t i = r.size(); i-- > db;) {
    if (sgn(r[i]) == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_class c = r[i] / b.back();
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (sgn(r[i]) != 0) return std::nullopt;
  trim(q);
  return q;
}

ZPoly primitive_part(ZPoly f) {
  trim(f);
  if (f.empty()) return f;
  mpz_class c = 0;
  for (const auto& v : f) c = gcd(c, v);
  if (sgn(f.back()) < 0) c = -c;
  for (auto& v : f) v /= c;
  return f;
}

ZPoly symmetric_mod(ZPoly f, const mpz_class& m) {
  const mpz_class half = m / 2;
  for (auto& v : f) {
    v %= m;
    if (sgn(v) < 0) v += m;
    if (v > half) v -= m;
  }
  trim(f);
  return f;
}

mpz_class factor_coefficient_bound(const ZPoly& f) {
  mpz_class norm2 = 0;
  for (const auto& v : f) norm2 += v * v;
  mpz_class norm = sqrt(norm2) + 1;
  mpz_class b = norm * abs(f.back());
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), f.size() - 1);
  return b;
}

}  // namespace redspec::modular
