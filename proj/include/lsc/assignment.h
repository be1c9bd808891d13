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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace lsc {

using Rational = boost::rational<std::int64_t>;

/// Sorted set of 1-based worker or dataset indices.
using IndexSet = std::vector<std::size_t>;

/// Per-worker communication cost p/q in message lengths, kept reduced.
class Cost {
 public:
  /// Throws UsageError unless p, q > 0.
  Cost(std::int64_t p, std::int64_t q = 1);

  /// Accepts "p/q" or an integer, e.g. "3/2", "2". Throws ParseError.
  static Cost parse(std::string_view text);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  Rational value() const { return {p_, q_}; }
  std::string str() const;

  friend bool operator==(const Cost&, const Cost&) = default;
  friend bool operator<(const Cost& a, const Cost& b) { return a.value() < b.value(); }

 private:
  std::int64_t p_;
  std::int64_t q_;
};

struct ParseOptions {
  /// Permit datasets held by no worker. Only meaningful for pure converse
  /// analysis; such assignments cannot be used to build schemes.
  bool allow_unassigned_datasets = false;
};

/// N x K data-assignment pattern. Row n is worker n, column k is dataset k;
/// every public index is 1-based.
class Assignment {
 public:
  /// Pattern is row-major, true = assigned.
  Assignment(std::size_t n_workers, std::size_t n_datasets, std::vector<bool> pattern,
             ParseOptions options = {});

  /// Parses the `.dam` text format: `#` comment lines, blank lines skipped,
  /// one worker per line of `*`/`0` cells with optional single spaces.
  static Assignment parse(std::string_view text, ParseOptions options = {});
  static Assignment load(const std::string& path, ParseOptions options = {});

  /// Canonical form: space-separated cells, one worker per line.
  std::string serialize() const;
  /// FNV-1a 64 over serialize(); a stable identity for output artifacts.
  std::uint64_t hash() const;

  std::size_t n_workers() const { return n_workers_; }
  std::size_t n_datasets() const { return n_datasets_; }
  bool holds(std::size_t worker, std::size_t dataset) const;

  IndexSet support(std::size_t worker) const;
  IndexSet complement(std::size_t worker) const;
  IndexSet holders(std::size_t dataset) const;
  IndexSet non_holders(std::size_t dataset) const;

  /// r = min_k |C_k|.
  std::size_t replication() const;
  /// max_n |S_n|, the upper end of the meaningful cost range.
  std::size_t max_load() const;
  /// 0 < p/q <= max_n |S_n|.
  bool cost_in_range(const Cost& cost) const;
  /// Complement of worker n over the qK virtual datasets.
  IndexSet extended_complement(std::size_t worker, std::size_t q) const;

  /// Total number of assigned cells.
  std::size_t star_count() const;

  friend bool operator==(const Assignment& a, const Assignment& b) {
    return a.n_workers_ == b.n_workers_ && a.n_datasets_ == b.n_datasets_ && a.pattern_ == b.pattern_;
  }

 private:
  void check_worker(std::size_t worker) const;
  void check_dataset(std::size_t dataset) const;

  std::size_t n_workers_;
  std::size_t n_datasets_;
  std::vector<bool> pattern_;
};

/// S^q = union over i in [0, q) of (S + iK).
IndexSet extended_complement(const IndexSet& complement, std::size_t q, std::size_t n_datasets);

}  // namespace lsc
