/* Copyright 2026 The lsc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lsc/structure.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "lsc/errors.h"

namespace lsc {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> row_zero_masks(const Assignment& a) {
  std::vector<Mask> masks(a.n_workers(), 0);
  for (std::size_t n = 1; n <= a.n_workers(); ++n)
    for (std::size_t k : a.complement(n)) masks[n - 1] |= Mask{1} << (k - 1);
  return masks;
}

IndexSet mask_to_set(Mask m) {
  IndexSet out;
  for (std::size_t i = 0; m != 0; ++i, m >>= 1)
    if (m & 1) out.push_back(i + 1);
  return out;
}

// p|G| + q|Q| > pN, exactly.
bool bottleneck(const Cost& c, std::size_t g, std::size_t q_size, std::size_t n) {
  return c.p() * static_cast<std::int64_t>(g) + c.q() * static_cast<std::int64_t>(q_size) >
         c.p() * static_cast<std::int64_t>(n);
}

void require_in_range(const Assignment& a, const Cost& cost) {
  if (!a.cost_in_range(cost)) {
    throw UsageError("cost " + cost.str() + " outside (0, " + std::to_string(a.max_load()) +
                     "], the range max_n |S_n| allows");
  }
}

Rational min_rational(Rational x, Rational y) { return x < y ? x : y; }

}  // namespace

IndexSet zero_column_set(const Assignment& a, const IndexSet& workers) {
  if (workers.empty()) throw UsageError("zero_column_set: worker set must be nonempty");
  IndexSet out;
  for (std::size_t k = 1; k <= a.n_datasets(); ++k) {
    const bool all_zero = std::none_of(workers.begin(), workers.end(),
                                       [&](std::size_t n) { return a.holds(n, k); });
    if (all_zero) out.push_back(k);
  }
  return out;
}

std::vector<ZeroBlock> sparsity_family(const Assignment& a, const Cost& cost,
                                       std::size_t enumeration_cap) {
  const std::size_t n = a.n_workers();
  if (n > enumeration_cap) {
    throw CapacityError("sparsity enumeration refused: N = " + std::to_string(n) + " exceeds cap " +
                        std::to_string(enumeration_cap) + " (2^N subsets)");
  }
  if (a.n_datasets() > 64) {
    throw CapacityError("sparsity enumeration supports K <= 64, got " + std::to_string(a.n_datasets()));
  }
  const std::vector<Mask> zeros = row_zero_masks(a);
  std::vector<ZeroBlock> family;
  IndexSet current;

  // Depth-first over worker subsets in ascending order; extending G only
  // shrinks Q(G), so an empty Q(G) closes the whole branch.
  auto visit = [&](auto&& self, std::size_t next, Mask common) -> void {
    for (std::size_t w = next; w < n; ++w) {
      const Mask m = common & zeros[w];
      if (m == 0) continue;
      current.push_back(w + 1);
      if (bottleneck(cost, current.size(), static_cast<std::size_t>(std::popcount(m)), n)) {
        family.push_back({current, mask_to_set(m)});
      }
      self(self, w + 1, m);
      current.pop_back();
    }
  };
  const Mask all = a.n_datasets() == 64 ? ~Mask{0} : (Mask{1} << a.n_datasets()) - 1;
  visit(visit, 0, all);

  std::sort(family.begin(), family.end(),
            [](const ZeroBlock& x, const ZeroBlock& y) { return x.workers < y.workers; });
  return family;
}

StructureReport analyze(const Assignment& a, const Cost& cost, std::size_t enumeration_cap) {
  require_in_range(a, cost);
  StructureReport rep;
  rep.cost = cost;
  rep.n_workers = a.n_workers();
  rep.n_datasets = a.n_datasets();
  rep.z_family = sparsity_family(a, cost, enumeration_cap);
  rep.r = a.replication();

  for (const ZeroBlock& b : rep.z_family) {
    rep.alpha = std::max(rep.alpha, b.workers.size());
    rep.g_prime.insert(rep.g_prime.end(), b.workers.begin(), b.workers.end());
  }
  std::sort(rep.g_prime.begin(), rep.g_prime.end());
  rep.g_prime.erase(std::unique(rep.g_prime.begin(), rep.g_prime.end()), rep.g_prime.end());

  for (std::size_t k = 1; k <= a.n_datasets(); ++k) {
    const std::size_t zeros = static_cast<std::size_t>(std::count_if(
        rep.g_prime.begin(), rep.g_prime.end(), [&](std::size_t w) { return !a.holds(w, k); }));
    rep.t = std::max(rep.t, zeros);
  }

  const auto n = static_cast<std::int64_t>(a.n_workers());
  const auto k = static_cast<std::int64_t>(a.n_datasets());
  const auto alpha = static_cast<std::int64_t>(rep.alpha);
  const auto t = static_cast<std::int64_t>(rep.t);
  rep.kc_converse = min_rational(cost.value() * (n - alpha), Rational(k));
  rep.kc_achievable = min_rational(cost.value() * (n - t), Rational(k));
  rep.converse_pieces = std::min(cost.p() * (n - alpha), cost.q() * k);
  rep.achievable_pieces = std::min(cost.p() * (n - t), cost.q() * k);
  rep.optimal = rep.t == rep.alpha;
  return rep;
}

Rational repetition_kc(const Assignment& a, const Cost& cost) {
  const auto r = static_cast<std::int64_t>(a.replication());
  if (r < 1) throw UsageError("repetition baseline needs every dataset held by some worker");
  return min_rational(cost.value() * r, Rational(static_cast<std::int64_t>(a.n_datasets())));
}

std::vector<TradeoffRow> tradeoff_curve(const Assignment& a, std::vector<Cost> costs) {
  if (costs.empty()) throw UsageError("tradeoff_curve needs at least one cost");
  std::sort(costs.begin(), costs.end());
  costs.erase(std::unique(costs.begin(), costs.end()), costs.end());
  std::vector<TradeoffRow> rows;
  rows.reserve(costs.size());
  for (const Cost& c : costs) {
    const StructureReport rep = analyze(a, c);
    rows.push_back({c, rep.kc_converse, rep.kc_achievable, repetition_kc(a, c)});
  }
  return rows;
}

FamilySummary brute_force_family(const Assignment& a, const Cost& cost) {
  const std::size_t n = a.n_workers();
  const std::size_t k = a.n_datasets();
  if (n > 12 || k > 12) {
    throw CapacityError("brute_force_family is capped at N, K <= 12; got " + std::to_string(n) +
                        "x" + std::to_string(k));
  }
  std::vector<Mask> row_zero(n, 0);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t d = 0; d < k; ++d)
      if (!a.holds(w + 1, d + 1)) row_zero[w] |= Mask{1} << d;

  FamilySummary out;
  Mask union_g = 0;
  for (Mask g = 0; g < (Mask{1} << n); ++g) {
    const auto g_size = static_cast<std::size_t>(std::popcount(g));
    for (Mask q = 0; q < (Mask{1} << k); ++q) {
      bool all_zero = true;
      for (std::size_t w = 0; w < n && all_zero; ++w) {
        if ((g >> w & 1) && (q & ~row_zero[w]) != 0) all_zero = false;
      }
      if (!all_zero) continue;
      if (!bottleneck(cost, g_size, static_cast<std::size_t>(std::popcount(q)), n)) continue;
      out.alpha = std::max(out.alpha, g_size);
      union_g |= g;
    }
  }
  out.g_prime = mask_to_set(union_g);
  return out;
}

}  // namespace lsc
