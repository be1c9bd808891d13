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

#include "lsc/simulate.h"

#include <algorithm>
#include <chrono>
#include <string>

#include "lsc/errors.h"

namespace lsc {

namespace {

constexpr std::uint64_t kMessageStream = 0x6d657373616765ULL;

}  // namespace

Matrix MessageSet::pieces() const {
  const std::size_t k = symbols.rows();
  const std::size_t len = piece_length();
  Matrix out(symbols.field(), q * k, len);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t d = 0; d < k; ++d)
      for (std::size_t c = 0; c < len; ++c) out.set(i * k + d, c, symbols(d, i * len + c));
  return out;
}

MessageSet generate_messages(const PrimeField& field, std::size_t n_datasets, std::size_t length,
                             std::size_t q, Rng& rng) {
  if (length == 0) throw UsageError("message length must be >= 1");
  if (q == 0) throw UsageError("subpacketization q must be >= 1");
  const std::size_t padded = (length + q - 1) / q * q;
  Matrix symbols(field, n_datasets, padded);
  for (std::size_t d = 0; d < n_datasets; ++d)
    for (std::size_t c = 0; c < length; ++c) symbols.set(d, c, field.sample(rng));
  return {length, padded, q, std::move(symbols)};
}

Matrix worker_encode(const Scheme& s, std::size_t worker, const MessageSet& w) {
  const std::size_t k = s.assignment.n_datasets();
  if (worker < 1 || worker > s.assignment.n_workers()) {
    throw UsageError("worker " + std::to_string(worker) + " out of range");
  }
  if (w.symbols.rows() != k || w.q != s.q()) throw UsageError("worker_encode: messages do not match scheme");
  Matrix local = w.pieces();
  for (std::size_t row = 0; row < local.rows(); ++row) {
    if (s.assignment.holds(worker, row % k + 1)) continue;
    for (std::size_t c = 0; c < local.cols(); ++c) local.set(row, c, 0);
  }
  return matmul(s.e[worker - 1], local);
}

Matrix master_decode(const Scheme& s, const std::vector<Matrix>& responses) {
  const std::size_t n = s.assignment.n_workers();
  if (responses.size() != n) {
    throw ProtocolError("master expected " + std::to_string(n) + " responses, got " +
                        std::to_string(responses.size()));
  }
  const std::size_t width = responses.front().cols();
  for (std::size_t i = 0; i < n; ++i) {
    if (responses[i].rows() != s.p() || responses[i].cols() != width) {
      throw ProtocolError("response from worker " + std::to_string(i + 1) + " has the wrong shape");
    }
  }
  return matmul(s.decoder, vstack(s.field, responses));
}

Matrix reference_task(const Scheme& s, const MessageSet& w) {
  const Matrix f1 = s.f1();
  const Matrix pieces = w.pieces();
  const PrimeField& f = s.field;
  Matrix out(f, f1.rows(), pieces.cols());
  for (std::size_t i = 0; i < f1.rows(); ++i) {
    for (std::size_t c = 0; c < pieces.cols(); ++c) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < f1.cols(); ++j) acc = f.add(acc, f.mul(f1(i, j), pieces(j, c)));
      out.set(i, c, acc);
    }
  }
  return out;
}

SimulationResult evaluate(const Scheme& s, const MessageSet& w) {
  const auto start = std::chrono::steady_clock::now();
  SimulationResult res;
  res.seed = s.seed;
  res.retries_used = s.retries_used;
  res.kc_pieces = s.kc_pieces;
  res.message_length = w.length;

  std::vector<Matrix> responses;
  for (std::size_t n = 1; n <= s.assignment.n_workers(); ++n) {
    responses.push_back(worker_encode(s, n, w));
    const std::size_t symbols = responses.back().rows() * responses.back().cols();
    res.per_worker_symbols.push_back(symbols);
    res.max_load_symbols = std::max(res.max_load_symbols, symbols);
  }
  const Matrix recovered = master_decode(s, responses);
  const Matrix expected = reference_task(s, w);
  for (std::size_t i = 0; i < expected.rows(); ++i)
    for (std::size_t c = 0; c < expected.cols(); ++c)
      if (recovered(i, c) != expected(i, c)) res.mismatch_positions.emplace_back(i, c);
  res.success = res.mismatch_positions.empty();
  res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

SimulationResult run_trial(const Assignment& a, const Cost& cost, std::size_t length, std::uint64_t seed,
                           const PrimeField& field) {
  const auto start = std::chrono::steady_clock::now();
  const Scheme s = build(a, cost, seed, field);
  Rng rng = Rng(seed).child(kMessageStream);
  const MessageSet w = generate_messages(field, a.n_datasets(), length, s.q(), rng);
  SimulationResult res = evaluate(s, w);
  res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

MonteCarloSummary run_monte_carlo(const Assignment& a, const Cost& cost, std::size_t length,
                                  std::size_t trials, std::uint64_t seed, const PrimeField& field) {
  const auto start = std::chrono::steady_clock::now();
  MonteCarloSummary sum{cost};
  sum.trials = trials;
  sum.seed = seed;
  sum.message_length = length;
  for (std::size_t i = 0; i < trials; ++i) {
    const SimulationResult r = run_trial(a, cost, length, derive_seed(seed, i), field);
    if (!r.success) ++sum.failures;
    sum.total_retries += r.retries_used;
    sum.max_retries = std::max(sum.max_retries, r.retries_used);
    const auto [lo, hi] = std::minmax_element(r.per_worker_symbols.begin(), r.per_worker_symbols.end());
    sum.min_load_symbols = i == 0 ? *lo : std::min(sum.min_load_symbols, *lo);
    sum.max_load_symbols = std::max(sum.max_load_symbols, *hi);
  }
  sum.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return sum;
}

}  // namespace lsc
