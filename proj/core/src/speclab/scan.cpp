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

#include "redspec/speclab/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "redspec/error.hpp"

namespace redspec {

ScanWindow ScanWindow::integers(long lo, long hi) {
  ScanWindow w;
  w.lo_ = lo;
  w.hi_ = hi;
  return w;
}

ScanWindow ScanWindow::grid(unsigned long height, unsigned long denominators) {
  ScanWindow w;
  w.grid_ = true;
  w.height_ = height;
  w.denominators_ = denominators;
  return w;
}

std::vector<mpq_class> ScanWindow::points() const {
  std::vector<mpq_class> out;
  if (!grid_) {
    for (long t = lo_; t <= hi_; ++t) out.emplace_back(t);
    return out;
  }
  for (unsigned long b = 1; b <= denominators_; ++b) {
    for (long a = -static_cast<long>(height_); a <= static_cast<long>(height_); ++a) {
      if (std::gcd(static_cast<unsigned long>(std::labs(a)), b) != 1) continue;
      out.emplace_back(a, b);
    }
  }
  auto height = [](const mpq_class& q) {
    return std::max(mpz_class(abs(q.get_num())), mpz_class(q.get_den()));
  };
  std::sort(out.begin(), out.end(), [&](const mpq_class& x, const mpq_class& y) {
    const mpz_class hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  return out;
}

std::string ScanWindow::describe() const {
  if (!grid_) return "integers [" + std::to_string(lo_) + ", " + std::to_string(hi_) + "]";
  return "fractions a/b, |a| <= " + std::to_string(height_) + ", 1 <= b <= " + std::to_string(denominators_);
}

const char* to_string(Reducibility r) {
  switch (r) {
    case Reducibility::kReducible:
      return "reducible";
    case Reducibility::kIrreducible:
      return "irreducible";
    case Reducibility::kUnknown:
      return "unknown";
  }
  return "?";
}

namespace {

std::vector<std::string> hypothesis_notes(const std::vector<RatPoly>& chain) {
  std::vector<std::string> notes;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const int d = chain[i].degree();
    const std::string name = "f_" + std::to_string(i + 1);
    if (d < 5) notes.push_back(name + " has degree " + std::to_string(d) + " < 5");
    if (d == 5) notes.push_back(name + " has degree 5");
    if (d >= 2 && !is_indecomposable(chain[i])) notes.push_back(name + " is decomposable");
  }
  if (chain.front().degree() <= 20) notes.push_back("deg f_1 <= 20");
  if (!notes.empty()) notes.insert(notes.begin(), "outside theorem hypotheses");
  return notes;
}

}  // namespace

ScanReport scan_window(const std::vector<RatPoly>& chain, std::size_t f1_index, const ScanWindow& window,
                       const ScanOptions& options) {
  if (chain.empty()) throw ContractError("scan needs a nonempty chain");
  if (f1_index < 1 || f1_index > chain.size())
    throw ContractError("f1 index " + std::to_string(f1_index) + " outside the chain");
  for (const auto& p : chain)
    if (p.degree() < 1) throw ContractError("chain member " + to_string(p) + " is constant");

  ScanReport report;
  report.window = window.describe();
  report.f = compose_chain(chain);
  report.f1 = compose_chain({chain.begin(), chain.begin() + f1_index});
  const RatPoly rest = compose_chain({chain.begin() + f1_index, chain.end()});
  const RatPoly fprime = report.f.derivative();
  // f - f1(q) = f1(rest) - f1(q) is divisible by rest - q.
  const bool identity_applies = report.f1.degree() >= 2;
  report.notes = hypothesis_notes(chain);

  const auto points = window.points();
  report.records.resize(points.size());
  auto work = [&](std::size_t i) {
    ScanRecord& rec = report.records[i];
    rec.t0 = points[i];
    const RatPoly g = report.f - RatPoly::constant(rec.t0);
    rec.discriminant_point = gcd(g, fprime).degree() > 0;
    auto member = value_set_member(report.f1, rec.t0);
    rec.in_value_set = member.member;
    rec.witness = member.witness;
    rec.factorization = factor_q(g, options.factor);
    rec.factor_degrees = factor_degrees(rec.factorization);
    switch (rec.factorization.status) {
      case FactorStatus::kFactored:
        rec.reducible = Reducibility::kReducible;
        break;
      case FactorStatus::kIrreducibleCertified:
        rec.reducible = Reducibility::kIrreducible;
        break;
      case FactorStatus::kUnknown:
        rec.reducible = Reducibility::kUnknown;
        break;
    }
    if (rec.in_value_set && identity_applies) {
      const RatPoly divisor = rest - RatPoly::constant(*rec.witness);
      if (!divmod(g, divisor).remainder.is_zero())
        throw InvariantError("value-set divisor does not divide f - t0 at " + rec.t0.get_str());
      if (rec.reducible == Reducibility::kIrreducible)
        throw InvariantError("f - t0 certified irreducible at value-set point " + rec.t0.get_str());
      if (rec.reducible == Reducibility::kUnknown) {
        rec.reducible = Reducibility::kReducible;
        rec.reducible_by_identity = true;
      }
    }
  };

  const unsigned nthreads = std::max(1u, options.threads);
  if (nthreads == 1) {
    for (std::size_t i = 0; i < points.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < points.size(); i = next++) {
          try {
            work(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  for (const auto& rec : report.records) {
    if (rec.reducible == Reducibility::kReducible) ++report.hits;
    if (rec.reducible == Reducibility::kUnknown) ++report.unknowns;
    if (rec.discriminant_point) ++report.discriminant_points;
    if (rec.reducible == Reducibility::kReducible && !rec.in_value_set && !rec.discriminant_point)
      report.exceptions.push_back(rec.t0);
  }
  return report;
}

}  // namespace redspec
