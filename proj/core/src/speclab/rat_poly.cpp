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

#include "redspec/speclab/rat_poly.hpp"

#include <cctype>

#include "redspec/error.hpp"

namespace redspec {

RatPoly::RatPoly(std::vector<mpq_class> coefficients) : c_(std::move(coefficients)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

RatPoly::RatPoly(std::initializer_list<long> coefficients) {
  for (long v : coefficients) c_.emplace_back(v);
  trim();
}

RatPoly RatPoly::constant(const mpq_class& c) { return RatPoly(std::vector<mpq_class>{c}); }

RatPoly RatPoly::x() { return RatPoly{0, 1}; }

RatPoly RatPoly::monomial(const mpq_class& c, std::size_t degree) {
  std::vector<mpq_class> v(degree + 1);
  v[degree] = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

mpq_class RatPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }

const mpq_class& RatPoly::leading() const {
  if (c_.empty()) throw ContractError("leading coefficient of the zero polynomial");
  return c_.back();
}

mpq_class RatPoly::operator()(const mpq_class& t) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (c_.empty()) return {};
  return *this * mpq_class(1 / leading());
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const mpq_class& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& q : c_) q *= s;
  return *this;
}

RatPoly operator-(const RatPoly& a) { return a * mpq_class(-1); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(out));
}

PolyDivision divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw ContractError("division by the zero polynomial");
  std::vector<mpq_class> r = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<mpq_class> q(a.degree() - db + 1);
  const mpq_class inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (sgn(r[i]) == 0) continue;
    mpq_class c = r[i] * inv;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b.coefficients()[j];
  }
  r.resize(db);
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

RatPoly power(const RatPoly& p, unsigned e) {
  RatPoly acc = RatPoly::constant(1), base = p;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

RatPoly compose(const RatPoly& g, const RatPoly& h) {
  RatPoly acc;
  const auto& c = g.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * h + RatPoly::constant(*it);
  return acc;
}

RatPoly compose_chain(const std::vector<RatPoly>& chain) {
  RatPoly acc = RatPoly::x();
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) acc = compose(*it, acc);
  return acc;
}

RatPoly chebyshev(unsigned n) {
  RatPoly prev = RatPoly::constant(2), cur = RatPoly::x();
  if (n == 0) return prev;
  for (unsigned i = 1; i < n; ++i) {
    RatPoly next = RatPoly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntegerForm integer_form(const RatPoly& p) {
  if (p.is_zero()) throw ContractError("integer form of the zero polynomial");
  mpz_class den = 1;
  for (const auto& q : p.coefficients()) den = lcm(den, mpz_class(q.get_den()));
  IntegerForm out;
  mpz_class content = 0;
  for (const auto& q : p.coefficients()) {
    mpz_class v = q.get_num() * (den / q.get_den());
    content = gcd(content, v);
    out.ints.push_back(v);
  }
  if (sgn(out.ints.back()) < 0) content = -content;
  for (auto& v : out.ints) v /= content;
  out.scale = mpq_class(content, den);
  out.scale.canonicalize();
  return out;
}

RatPoly from_integers(const std::vector<mpz_class>& ints) {
  std::vector<mpq_class> c(ints.begin(), ints.end());
  return RatPoly(std::move(c));
}

std::string to_string(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (int d = p.degree(); d >= 0; --d) {
    if (sgn(c[d]) == 0) continue;
    const bool neg = sgn(c[d]) < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    mpq_class mag = abs(c[d]);
    if (d == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "x";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  RatPoly parse() {
    std::vector<mpq_class> coeffs;
    skip();
    bool first = true;
    while (true) {
      skip();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        if (at_end()) break;
        fail("expected '+' or '-'");
      }
      if (at_end()) fail("expected a term");
      auto [c, d] = term();
      if (coeffs.size() <= d) coeffs.resize(d + 1);
      coeffs[d] += sign * c;
      first = false;
      skip();
      if (at_end()) break;
    }
    return RatPoly(std::move(coeffs));
  }

 private:
  std::pair<mpq_class, std::size_t> term() {
    mpq_class c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(digits());
      mpz_class den = 1;
      skip();
      if (peek() == '/') {
        get();
        skip();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a denominator");
        den = mpz_class(digits());
        if (den == 0) fail("zero denominator");
      }
      c = mpq_class(num, den);
      c.canonicalize();
      have_coeff = true;
      skip();
      if (peek() == '*') {
        get();
        skip();
        if (peek() != 'x') fail("expected 'x' after '*'");
      }
    }
    if (peek() != 'x') {
      if (!have_coeff) fail("expected a coefficient or 'x'");
      return {c, 0};
    }
    get();
    skip();
    std::size_t d = 1;
    if (peek() == '^') {
      get();
      skip();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
      const std::size_t col = pos_;
      std::string e = digits();
      if (e.size() > 4) throw ParseError("exponent too large", 1, col + 1);
      d = std::stoul(e);
    }
    return {c, d};
  }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out += get();
    return out;
  }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::vector<RatPoly> parse_chain(std::string_view text) {
  std::vector<RatPoly> out;
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    bool blank = true;
    for (char ch : line) blank = blank && std::isspace(static_cast<unsigned char>(ch));
    if (!blank) {
      try {
        out.push_back(parse_poly(line));
      } catch (const ParseError& e) {
        throw ParseError("bad polynomial", line_no, e.column());
      }
    }
    start = end + 1;
  }
  if (out.empty()) throw ParseError("chain lists no polynomials");
  return out;
}

namespace {

// h monic of the given degree with h(0) = 0 and f ~ lc * h^outer near
// infinity; g from the h-adic expansion of f. Empty when some digit is not
// constant.
std::optional<std::pair<RatPoly, RatPoly>> try_split(const RatPoly& f, unsigned outer, unsigned inner) {
  const RatPoly monic_f = f.monic();
  const unsigned n = outer * inner;
  std::vector<mpq_class> h(inner + 1);
  h[inner] = 1;
  for (unsigned j = 1; j < inner; ++j) {
    RatPoly hp = power(RatPoly(h), outer);
    h[inner - j] = (monic_f.coeff(n - j) - hp.coeff(n - j)) / outer;
  }
  RatPoly hpoly(h);
  std::vector<mpq_class> g;
  RatPoly rest = f;
  for (unsigned i = 0; i <= outer; ++i) {
    auto [q, r] = divmod(rest, hpoly);
    if (r.degree() > 0) return std::nullopt;
    g.push_back(r.coeff(0));
    rest = std::move(q);
  }
  if (!rest.is_zero()) return std::nullopt;
  RatPoly gpoly(std::move(g));
  if (!(compose(gpoly, hpoly) == f)) return std::nullopt;
  return std::make_pair(std::move(gpoly), std::move(hpoly));
}

}  // namespace

std::vector<DecompositionSplit> decompose(const RatPoly& f) {
  if (f.degree() < 2) throw ContractError("decompose needs degree at least 2");
  const unsigned n = f.degree();
  std::vector<DecompositionSplit> out;
  for (unsigned inner = 2; inner < n; ++inner) {
    if (n % inner != 0) continue;
    DecompositionSplit s;
    s.inner_degree = inner;
    s.outer_degree = n / inner;
    s.parts = try_split(f, s.outer_degree, inner);
    out.push_back(std::move(s));
  }
  return out;
}

bool is_indecomposable(const RatPoly& f) {
  for (const auto& s : decompose(f))
    if (s.parts) return false;
  return true;
}

}  // namespace redspec
