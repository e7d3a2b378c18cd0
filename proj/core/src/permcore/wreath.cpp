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

#include "redspec/permcore/wreath.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "redspec/error.hpp"

namespace redspec {

Permutation imprimitive_permutation(const WreathElement& w) {
  const std::size_t m = w.top.degree();
  const std::size_t k = m == 0 ? 0 : w.base.at(0).degree();
  std::vector<Point> img(k * m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t x = 0; x < k; ++x)
      img[j * k + x] = static_cast<Point>(w.top(static_cast<Point>(j)) * k +
                                          w.base[j](static_cast<Point>(x)));
  return Permutation(std::move(img));
}

Permutation product_permutation(const WreathElement& w, const Limits& limits) {
  const std::size_t m = w.top.degree();
  const std::size_t k = m == 0 ? 1 : w.base.at(0).degree();
  std::uint64_t total = 1;
  std::vector<std::uint64_t> weight(m);
  for (std::size_t j = 0; j < m; ++j) {
    weight[j] = total;
    total *= k;
    if (total > limits.product_degree) {
      throw ResourceError("product_degree", limits.product_degree,
                          "product action of degree " + std::to_string(k) + "^" +
                              std::to_string(m));
    }
  }
  // Image of tuple x is sum_j b_j(x_j) * k^{pi(j)}; accumulate per coordinate.
  std::vector<Point> img(total, 0);
  std::vector<std::size_t> digit(m, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t y = 0;
    for (std::size_t j = 0; j < m; ++j)
      y += w.base[j](static_cast<Point>(digit[j])) * weight[w.top(static_cast<Point>(j))];
    img[idx] = static_cast<Point>(y);
    for (std::size_t j = 0; j < m && ++digit[j] == k; ++j) digit[j] = 0;
  }
  return Permutation(std::move(img));
}

WreathElement split_imprimitive(const Permutation& x, std::size_t k) {
  if (k == 0 || x.degree() % k != 0) throw ContractError("degree is not a multiple of k");
  const std::size_t m = x.degree() / k;
  std::vector<Point> top(m);
  WreathElement w;
  for (std::size_t j = 0; j < m; ++j) {
    top[j] = static_cast<Point>(x(static_cast<Point>(j * k)) / k);
    std::vector<Point> b(k);
    for (std::size_t i = 0; i < k; ++i) {
      Point y = x(static_cast<Point>(j * k + i));
      if (y / k != top[j]) throw ContractError("permutation does not preserve the blocks");
      b[i] = static_cast<Point>(y % k);
    }
    w.base.emplace_back(std::move(b));
  }
  w.top = Permutation(std::move(top));
  return w;
}

PermGroup wreath_product(const PermGroup& u, const PermGroup& v, WreathKind kind,
                         const Limits& limits) {
  const std::size_t k = u.degree(), m = v.degree();
  if (k == 0 || m == 0) throw ContractError("wreath factors need positive degree");
  std::vector<WreathElement> gens;
  auto identity_base = [&] { return std::vector<Permutation>(m, Permutation::identity(k)); };
  // One copy of the base generators per top orbit suffices.
  for (const auto& orb : orbits(v))
    for (const auto& g : u.generators()) {
      WreathElement w{identity_base(), Permutation::identity(m)};
      w.base[orb.front()] = g;
      gens.push_back(std::move(w));
    }
  for (const auto& g : v.generators()) gens.push_back({identity_base(), g});
  std::vector<Permutation> perms;
  std::size_t degree = k * m;
  if (kind == WreathKind::kProduct) {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), k, m);
    if (d > limits.product_degree) {
      throw ResourceError("product_degree", limits.product_degree,
                          "product action of degree " + d.get_str());
    }
    degree = d.get_ui();
  }
  for (const auto& w : gens) {
    Permutation p = kind == WreathKind::kImprimitive ? imprimitive_permutation(w)
                                                     : product_permutation(w, limits);
    if (!p.is_identity()) perms.push_back(std::move(p));
  }
  return PermGroup(degree, std::move(perms));
}

std::vector<Partition> partitions_of(std::uint32_t n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t rest,
                                                               std::uint32_t max) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t p = std::min(rest, max); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Permutation standard_permutation(std::size_t degree, const Partition& type) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::size_t start = 0;
  for (std::uint32_t len : type) {
    if (start + len > degree) throw ContractError("cycle type exceeds degree");
    for (std::size_t i = 0; i < len; ++i)
      img[start + i] = static_cast<Point>(start + (i + 1) % len);
    start += len;
  }
  return Permutation(std::move(img));
}

mpz_class centralizer_order(const Partition& type) {
  std::map<std::uint32_t, unsigned long> mult;
  for (auto p : type) ++mult[p];
  mpz_class c = 1;
  for (auto [len, r] : mult) {
    mpz_class f, pw;
    mpz_fac_ui(f.get_mpz_t(), r);
    mpz_ui_pow_ui(pw.get_mpz_t(), len, r);
    c *= f * pw;
  }
  return c;
}

namespace {

std::uint64_t partition_order(const Partition& p) {
  std::uint64_t l = 1;
  for (auto x : p) l = std::lcm(l, static_cast<std::uint64_t>(x));
  return l;
}

}  // namespace

std::string WreathClass::label() const {
  std::string s = format_partition(top) + "|";
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cycles[i].first) + ":" + format_partition(cycles[i].second);
  }
  return s;
}

SymWreathSym::SymWreathSym(std::size_t k, std::size_t m)
    : k_(k), m_(m), k_partitions_(partitions_of(static_cast<std::uint32_t>(k))) {
  if (k == 0 || m == 0) throw ContractError("wreath factors need positive degree");
}

mpz_class SymWreathSym::order() const {
  mpz_class fk, fm, pw;
  mpz_fac_ui(fk.get_mpz_t(), k_);
  mpz_fac_ui(fm.get_mpz_t(), m_);
  mpz_pow_ui(pw.get_mpz_t(), fk.get_mpz_t(), m_);
  return pw * fm;
}

PermGroup SymWreathSym::imprimitive_group() const {
  return wreath_product(PermGroup::symmetric(k_), PermGroup::symmetric(m_),
                        WreathKind::kImprimitive);
}

PermGroup SymWreathSym::product_group(const Limits& limits) const {
  return wreath_product(PermGroup::symmetric(k_), PermGroup::symmetric(m_), WreathKind::kProduct,
                        limits);
}

void SymWreathSym::for_each_class(const std::function<bool(const Partition&)>& top_filter,
                                  const std::function<void(const WreathClass&)>& visit) const {
  const mpz_class group_order = order();
  const std::size_t np = k_partitions_.size();
  std::vector<std::uint64_t> kappa_order(np);
  std::vector<mpz_class> kappa_cent(np);
  for (std::size_t i = 0; i < np; ++i) {
    kappa_order[i] = partition_order(k_partitions_[i]);
    kappa_cent[i] = centralizer_order(k_partitions_[i]);
  }
  for (const auto& top : partitions_of(static_cast<std::uint32_t>(m_))) {
    if (!top_filter(top)) continue;
    // Distinct cycle lengths (descending) with multiplicities.
    std::vector<std::pair<std::uint32_t, std::size_t>> lengths;
    for (auto len : top) {
      if (lengths.empty() || lengths.back().first != len) lengths.emplace_back(len, 0);
      ++lengths.back().second;
    }
    std::vector<std::vector<std::size_t>> choice(lengths.size());
    std::function<void(std::size_t)> rec = [&](std::size_t li) {
      if (li == lengths.size()) {
        WreathClass c;
        c.top = top;
        c.top_order = partition_order(top);
        mpz_class cent = 1;
        for (std::size_t a = 0; a < lengths.size(); ++a) {
          const std::uint32_t len = lengths[a].first;
          const auto& ch = choice[a];
          for (std::size_t i = 0; i < ch.size();) {
            std::size_t j = i;
            while (j < ch.size() && ch[j] == ch[i]) ++j;
            const unsigned long r = j - i;
            mpz_class f, pw;
            mpz_fac_ui(f.get_mpz_t(), r);
            mpz_class base = len * kappa_cent[ch[i]];
            mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), r);
            cent *= f * pw;
            c.element_order = std::lcm(c.element_order, len * kappa_order[ch[i]]);
            i = j;
          }
          for (std::size_t idx : ch) c.cycles.emplace_back(len, k_partitions_[idx]);
        }
        c.size = group_order / cent;
        visit(c);
        return;
      }
      const std::size_t count = lengths[li].second;
      auto& ch = choice[li];
      ch.assign(count, 0);
      // Nondecreasing index sequences of the given length.
      for (;;) {
        rec(li + 1);
        std::size_t pos = count;
        while (pos > 0 && ch[pos - 1] == np - 1) --pos;
        if (pos == 0) break;
        std::size_t v = ch[pos - 1] + 1;
        for (std::size_t q = pos - 1; q < count; ++q) ch[q] = v;
      }
    };
    rec(0);
  }
}

std::vector<WreathClass> SymWreathSym::classes(const Limits& limits) const {
  std::vector<WreathClass> out;
  for_each_class([](const Partition&) { return true; },
                 [&](const WreathClass& c) {
                   if (out.size() >= limits.element_enumeration) {
                     throw ResourceError("element_enumeration", limits.element_enumeration,
                                         "class count of the wreath product");
                   }
                   out.push_back(c);
                 });
  return out;
}

WreathElement SymWreathSym::representative(const WreathClass& c) const {
  WreathElement w;
  w.base.assign(m_, Permutation::identity(k_));
  Partition top_type;
  for (const auto& cyc : c.cycles) top_type.push_back(cyc.first);
  w.top = standard_permutation(m_, top_type);
  std::size_t start = 0;
  for (const auto& cyc : c.cycles) {
    w.base[start] = standard_permutation(k_, cyc.second);
    start += cyc.first;
  }
  return w;
}

}  // namespace redspec
