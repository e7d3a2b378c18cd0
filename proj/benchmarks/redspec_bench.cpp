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

#include <benchmark/benchmark.h>

#include "redspec/genus/table1.hpp"
#include "redspec/permcore/perm_group.hpp"
#include "redspec/redset/redset.hpp"
#include "redspec/speclab/factor.hpp"
#include "redspec/speclab/scan.hpp"

namespace {

using namespace redspec;

void BM_Table1Sweep(benchmark::State& state) {
  for (auto _ : state) {
    std::size_t n = 0;
    for (int row = 1; row <= kTable1Rows; ++row)
      for (const auto& [l, a] : table1_parameters(row, 20, 60)) n += table1_verify(row, l, a).admissible;
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_Table1Sweep)->Unit(benchmark::kMillisecond);

void BM_WreathScan(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wreath_scan(k).triples);
}
BENCHMARK(BM_WreathScan)->DenseRange(5, 10)->Unit(benchmark::kMillisecond);

void BM_SymmetricOrder(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    PermGroup g = PermGroup::symmetric(n);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SymmetricOrder)->Arg(10)->Arg(25)->Arg(60);

const RatPoly& composite() {
  static const RatPoly f = compose(RatPoly({3, -7, 0, 0, 0, 0, 0, 1}), RatPoly({1, -5, 0, 0, 0, 1}));
  return f;
}

void BM_FactorDegree35(benchmark::State& state) {
  const RatPoly g = composite() - RatPoly::constant(static_cast<long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(factor_q(g).factors.size());
}
BENCHMARK(BM_FactorDegree35)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ScanComposite(benchmark::State& state) {
  const std::vector<RatPoly> chain = {RatPoly({3, -7, 0, 0, 0, 0, 0, 1}), RatPoly({1, -5, 0, 0, 0, 1})};
  ScanOptions o;
  for (auto _ : state) benchmark::DoNotOptimize(scan_window(chain, 1, ScanWindow::integers(-50, 50), o).hits);
}
BENCHMARK(BM_ScanComposite)->Unit(benchmark::kMillisecond);

void BM_ScanChebyshevGrid(benchmark::State& state) {
  const std::vector<RatPoly> chain = {chebyshev(2), chebyshev(2)};
  ScanOptions o;
  for (auto _ : state) benchmark::DoNotOptimize(scan_window(chain, 1, ScanWindow::grid(20, 6), o).hits);
}
BENCHMARK(BM_ScanChebyshevGrid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
