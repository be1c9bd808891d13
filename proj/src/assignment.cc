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

#include "lsc/assignment.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "lsc/errors.h"

namespace lsc {

Cost::Cost(std::int64_t p, std::int64_t q) {
  if (p <= 0 || q <= 0) {
    throw UsageError("cost must be a positive rational, got " + std::to_string(p) + "/" +
                     std::to_string(q));
  }
  const std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

Cost Cost::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw ParseError("invalid cost '" + std::string(text) + "'");
    }
    return v;
  };
  const auto slash = text.find('/');
  const std::int64_t p = parse_int(text.substr(0, slash));
  const std::int64_t q = slash == std::string_view::npos ? 1 : parse_int(text.substr(slash + 1));
  if (p <= 0 || q <= 0) throw ParseError("cost must be positive, got '" + std::string(text) + "'");
  return Cost(p, q);
}

std::string Cost::str() const {
  return q_ == 1 ? std::to_string(p_) : std::to_string(p_) + "/" + std::to_string(q_);
}

Assignment::Assignment(std::size_t n_workers, std::size_t n_datasets, std::vector<bool> pattern,
                       ParseOptions options)
    : n_workers_(n_workers), n_datasets_(n_datasets), pattern_(std::move(pattern)) {
  if (n_workers_ == 0 || n_datasets_ == 0) throw ValidationError("assignment needs N >= 1 and K >= 1");
  if (pattern_.size() != n_workers_ * n_datasets_) throw UsageError("assignment pattern size mismatch");
  if (options.allow_unassigned_datasets) return;
  for (std::size_t k = 1; k <= n_datasets_; ++k) {
    if (holders(k).empty()) {
      throw ValidationError("dataset " + std::to_string(k) + " is not assigned to any worker");
    }
  }
}

Assignment Assignment::parse(std::string_view text, ParseOptions options) {
  std::vector<std::vector<bool>> rows;
  std::size_t line_no = 0;
  std::size_t first_row_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;

    const auto last = line.find_last_not_of(" \t");
    std::vector<bool> row;
    for (std::size_t i = first; i <= last; ++i) {
      const char c = line[i];
      if (c == '*' || c == '0') {
        row.push_back(c == '*');
      } else if (c == ' ') {
        // a single separator between two cells
        if (line[i - 1] == ' ' || line[i + 1] == ' ') throw ParseError("repeated space", line_no, i + 1);
      } else {
        throw ParseError(std::string("illegal character '") + c + "'", line_no, i + 1);
      }
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("row has " + std::to_string(row.size()) + " cells, expected " +
                           std::to_string(rows.front().size()) + " (as on line " +
                           std::to_string(first_row_line) + ")",
                       line_no, first + 1);
    }
    if (rows.empty()) first_row_line = line_no;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty assignment");

  const std::size_t n = rows.size();
  const std::size_t k = rows.front().size();
  std::vector<bool> pattern;
  pattern.reserve(n * k);
  for (const auto& r : rows) pattern.insert(pattern.end(), r.begin(), r.end());
  return Assignment(n, k, std::move(pattern), options);
}

Assignment Assignment::load(const std::string& path, ParseOptions options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open assignment file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), options);
}

std::string Assignment::serialize() const {
  std::string out;
  for (std::size_t n = 0; n < n_workers_; ++n) {
    for (std::size_t k = 0; k < n_datasets_; ++k) {
      if (k != 0) out += ' ';
      out += pattern_[n * n_datasets_ + k] ? '*' : '0';
    }
    out += '\n';
  }
  return out;
}

std::uint64_t Assignment::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void Assignment::check_worker(std::size_t worker) const {
  if (worker < 1 || worker > n_workers_) {
    throw UsageError("worker index " + std::to_string(worker) + " outside [1, " +
                     std::to_string(n_workers_) + "]");
  }
}

void Assignment::check_dataset(std::size_t dataset) const {
  if (dataset < 1 || dataset > n_datasets_) {
    throw UsageError("dataset index " + std::to_string(dataset) + " outside [1, " +
                     std::to_string(n_datasets_) + "]");
  }
}

bool Assignment::holds(std::size_t worker, std::size_t dataset) const {
  check_worker(worker);
  check_dataset(dataset);
  return pattern_[(worker - 1) * n_datasets_ + (dataset - 1)];
}

IndexSet Assignment::support(std::size_t worker) const {
  check_worker(worker);
  IndexSet s;
  for (std::size_t k = 1; k <= n_datasets_; ++k)
    if (pattern_[(worker - 1) * n_datasets_ + k - 1]) s.push_back(k);
  return s;
}

IndexSet Assignment::complement(std::size_t worker) const {
  check_worker(worker);
  IndexSet s;
  for (std::size_t k = 1; k <= n_datasets_; ++k)
    if (!pattern_[(worker - 1) * n_datasets_ + k - 1]) s.push_back(k);
  return s;
}

IndexSet Assignment::holders(std::size_t dataset) const {
  check_dataset(dataset);
  IndexSet s;
  for (std::size_t n = 1; n <= n_workers_; ++n)
    if (pattern_[(n - 1) * n_datasets_ + dataset - 1]) s.push_back(n);
  return s;
}

IndexSet Assignment::non_holders(std::size_t dataset) const {
  check_dataset(dataset);
  IndexSet s;
  for (std::size_t n = 1; n <= n_workers_; ++n)
    if (!pattern_[(n - 1) * n_datasets_ + dataset - 1]) s.push_back(n);
  return s;
}

std::size_t Assignment::replication() const {
  std::size_t r = n_workers_;
  for (std::size_t k = 1; k <= n_datasets_; ++k) r = std::min(r, holders(k).size());
  return r;
}

std::size_t Assignment::max_load() const {
  std::size_t m = 0;
  for (std::size_t n = 1; n <= n_workers_; ++n) m = std::max(m, support(n).size());
  return m;
}

bool Assignment::cost_in_range(const Cost& cost) const {
  return cost.value() <= Rational(static_cast<std::int64_t>(max_load()));
}

IndexSet Assignment::extended_complement(std::size_t worker, std::size_t q) const {
  return lsc::extended_complement(complement(worker), q, n_datasets_);
}

std::size_t Assignment::star_count() const {
  return static_cast<std::size_t>(std::count(pattern_.begin(), pattern_.end(), true));
}

IndexSet extended_complement(const IndexSet& complement, std::size_t q, std::size_t n_datasets) {
  if (q == 0) throw UsageError("subpacketization q must be >= 1");
  IndexSet out;
  out.reserve(q * complement.size());
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t k : complement) out.push_back(k + i * n_datasets);
  return out;
}

}  // namespace lsc
