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

#include <algorithm>

#include "lsc/structure.h"

namespace lsc {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Kuhn's augmenting-path matching of columns [first, n_cols) onto rows not
// in `blocked`. Returns kNone on success, else the column that failed;
// `seen_col` then marks the columns its alternating search reached.
std::size_t kuhn(const std::vector<std::vector<bool>>& zero, std::size_t n_cols, std::size_t first,
                 const std::vector<bool>& blocked, std::vector<bool>& seen_col) {
  const std::size_t n_rows = zero.size();
  std::vector<std::size_t> row_owner(n_rows, kNone);
  std::vector<bool> seen_row;
  auto augment = [&](auto&& self, std::size_t c) -> bool {
    seen_col[c] = true;
    for (std::size_t r = 0; r < n_rows; ++r) {
      if (zero[r][c] || blocked[r] || seen_row[r]) continue;
      seen_row[r] = true;
      if (row_owner[r] == kNone || self(self, row_owner[r])) {
        row_owner[r] = c;
        return true;
      }
    }
    return false;
  };
  for (std::size_t c = first; c < n_cols; ++c) {
    seen_row.assign(n_rows, false);
    seen_col.assign(n_cols, false);
    if (!augment(augment, c)) return c;
  }
  return kNone;
}

}  // namespace

Transversal hall_transversal(const std::vector<std::vector<bool>>& zero_pattern, std::size_t n_cols) {
  const std::size_t n_rows = zero_pattern.size();
  std::vector<bool> blocked(n_rows, false);
  std::vector<bool> seen_col(n_cols, false);
  Transversal out;
  if (kuhn(zero_pattern, n_cols, 0, blocked, seen_col) != kNone) {
    // The failed search reached a column set X whose admissible rows are all
    // matched inside X: |N(X)| = |X| - 1.
    for (std::size_t j = 0; j < n_cols; ++j)
      if (seen_col[j]) out.deficient_columns.push_back(j);
    return out;
  }
  // Lexicographically smallest transversal: fix columns in order, each to the
  // lowest row that still lets the rest be matched.
  out.rows.assign(n_cols, kNone);
  for (std::size_t c = 0; c < n_cols; ++c) {
    for (std::size_t r = 0; r < n_rows; ++r) {
      if (zero_pattern[r][c] || blocked[r]) continue;
      blocked[r] = true;
      if (kuhn(zero_pattern, n_cols, c + 1, blocked, seen_col) == kNone) {
        out.rows[c] = r;
        break;
      }
      blocked[r] = false;
    }
  }
  out.feasible = true;
  return out;
}

}  // namespace lsc
