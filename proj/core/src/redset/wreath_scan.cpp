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

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "redspec/error.hpp"
#include "redspec/permcore/wreath.hpp"
#include "redspec/redset/redset.hpp"

namespace redspec {

namespace {

constexpr std::size_t kTop = 5;

std::uint64_t partition_lcm(const Partition& p) {
  std::uint64_t l = 1;
  for (auto part : p) l = std::lcm<std::uint64_t>(l, part);
  return l;
}

}  // namespace

WreathScanResult wreath_scan(unsigned k, unsigned threads, const Limits& limits) {
  if (k < 2 || k > 10) throw InputError("wreath scan needs 2 <= k <= 10, got " + std::to_string(k));
  std::uint64_t degree = 1;
  for (std::size_t i = 0; i < kTop; ++i) degree *= k;
  if (degree > limits.product_degree) {
    throw ResourceError("product_degree", limits.product_degree,
                        "product action of degree " + std::to_string(degree));
  }
  SymWreathSym w(k, kTop);
  std::vector<WreathClass> selected;
  std::vector<int> category;  // 0, 1, 2 for orders 2, 4, 5
  w.for_each_class(
      [](const Partition& top) {
        const auto l = partition_lcm(top);
        return l == 2 || l == 4 || l == 5;
      },
      [&](const WreathClass& c) {
        for (int cat = 0; cat < 3; ++cat) {
          const std::uint64_t want = cat == 0 ? 2 : (cat == 1 ? 4 : 5);
          if (c.element_order == want && c.top_order == want) {
            selected.push_back(c);
            category.push_back(cat);
          }
        }
      });

  std::vector<std::uint64_t> index(selected.size());
  auto work = [&](std::size_t i) {
    Permutation x = product_permutation(w.representative(selected[i]), limits);
    index[i] = degree - x.num_cycles();
  };
  const unsigned nthreads = std::max(1u, threads);
  if (nthreads == 1) {
    for (std::size_t i = 0; i < selected.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  WreathScanResult out;
  out.k = k;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    auto& list = category[i] == 0 ? out.order2 : (category[i] == 1 ? out.order4 : out.order5);
    list.push_back({selected[i].label(), index[i], selected[i].size});
  }
  out.triples = static_cast<std::uint64_t>(out.order2.size()) * out.order4.size() * out.order5.size();
  const auto n = static_cast<std::int64_t>(degree);
  for (std::size_t a = 0; a < out.order2.size(); ++a) {
    for (std::size_t b = 0; b < out.order4.size(); ++b) {
      for (std::size_t c = 0; c < out.order5.size(); ++c) {
        const std::uint64_t sum = out.order2[a].index + out.order4[b].index + out.order5[c].index;
        if (sum % 2 != 0) continue;
        const std::int64_t genus = static_cast<std::int64_t>(sum / 2) - n + 1;
        if (genus == 0 || genus == 1) out.flagged.push_back({a, b, c, sum, genus});
      }
    }
  }
  return out;
}

}  // namespace redspec
