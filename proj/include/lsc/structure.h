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

#pragma once

#include <cstddef>
#include <vector>

#include "lsc/assignment.h"

namespace lsc {

/// An all-zero block A(workers, datasets) of the assignment, with `datasets`
/// the inclusion-maximal column set for `workers`.
struct ZeroBlock {
  IndexSet workers;
  IndexSet datasets;

  friend bool operator==(const ZeroBlock&, const ZeroBlock&) = default;
};

/// Combinatorial structure of an assignment at a fixed cost.
///
/// The family holds every worker set G whose maximal zero column set Q(G)
/// satisfies p|G| + q|Q(G)| > pN. Any qualifying pair (G, Q) has Q inside
/// Q(G), and growing Q only helps the inequality, so these representatives
/// determine alpha and G' exactly.
struct StructureReport {
  Cost cost{1};
  std::size_t n_workers = 0;
  std::size_t n_datasets = 0;
  std::vector<ZeroBlock> z_family;
  std::size_t alpha = 0;  // max |G| over the family, 0 if empty
  IndexSet g_prime;       // union of G over the family
  std::size_t t = 0;      // max zeros in a column of A(G', .)
  std::size_t r = 0;      // min column star count
  Rational kc_converse;   // min{C(N - alpha), K}
  Rational kc_achievable; // min{C(N - t), K}
  std::int64_t converse_pieces = 0;    // q * kc_converse
  std::int64_t achievable_pieces = 0;  // q * kc_achievable = min{p(N - t), qK}
  bool optimal = false;                // t == alpha
};

inline constexpr std::size_t kDefaultEnumerationCap = 24;

/// Columns that are zero on every row of `workers` (1-based, nonempty).
IndexSet zero_column_set(const Assignment& a, const IndexSet& workers);

/// Maximal-Q representatives of the sparsity family, sorted by worker set.
/// Enumerates worker subsets, pruning supersets once Q(G) empties.
/// Throws CapacityError for N above `enumeration_cap` or K above 64.
std::vector<ZeroBlock> sparsity_family(const Assignment& a, const Cost& cost,
                                       std::size_t enumeration_cap = kDefaultEnumerationCap);

/// Throws UsageError if the cost is outside (0, max_n |S_n|].
StructureReport analyze(const Assignment& a, const Cost& cost,
                        std::size_t enumeration_cap = kDefaultEnumerationCap);

/// Computable dimension of repeating the optimal one-dimensional scheme
/// (cost 1/r per dimension) at total cost C, capped at K.
Rational repetition_kc(const Assignment& a, const Cost& cost);

struct TradeoffRow {
  Cost cost{1};
  Rational kc_converse;
  Rational kc_achievable;
  Rational kc_repetition;
};

/// One row per distinct cost, ascending.
std::vector<TradeoffRow> tradeoff_curve(const Assignment& a, std::vector<Cost> costs);

struct FamilySummary {
  std::size_t alpha = 0;
  IndexSet g_prime;

  friend bool operator==(const FamilySummary&, const FamilySummary&) = default;
};

/// Literal oracle: tests every (G, Q) pair over all row and column subsets.
/// N and K are capped at 12.
FamilySummary brute_force_family(const Assignment& a, const Cost& cost);

/// Result of a system-of-distinct-representatives search.
struct Transversal {
  bool feasible = false;
  /// rows[j] is the 0-based row chosen for column j (when feasible).
  std::vector<std::size_t> rows;
  /// A column set whose admissible rows number fewer than its size (when infeasible).
  std::vector<std::size_t> deficient_columns;
};

/// `zero_pattern[i][j]` is true when cell (i, j) is guaranteed zero. Picks,
/// for every column, a distinct row whose cell is not guaranteed zero. The
/// lexicographically smallest such assignment is returned.
Transversal hall_transversal(const std::vector<std::vector<bool>>& zero_pattern,
                             std::size_t n_cols);

}  // namespace lsc
