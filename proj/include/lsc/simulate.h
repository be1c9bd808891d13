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
#include <utility>
#include <vector>

#include "lsc/scheme.h"

namespace lsc {

/// K messages of L symbols. When q does not divide L the messages are padded
/// with trailing zeros up to `padded_length`.
struct MessageSet {
  std::size_t length;         // logical L
  std::size_t padded_length;  // multiple of q
  std::size_t q;
  Matrix symbols;             // K x padded_length

  std::size_t piece_length() const { return padded_length / q; }
  /// qK x (padded_length / q); row i*K + k holds piece i of message k (0-based).
  Matrix pieces() const;
};

MessageSet generate_messages(const PrimeField& field, std::size_t n_datasets, std::size_t length,
                             std::size_t q, Rng& rng);

/// X_n = E_n * W_pieces computed from worker n's own pieces only: rows of
/// datasets outside S_n are zeroed before the product.
Matrix worker_encode(const Scheme& s, std::size_t worker, const MessageSet& w);

/// decoder * [X_1; ...; X_N]. Throws ProtocolError unless exactly N responses
/// of the expected shape are present.
Matrix master_decode(const Scheme& s, const std::vector<Matrix>& responses);

/// F1 * W_pieces by a direct triple loop, independent of the scheme path.
Matrix reference_task(const Scheme& s, const MessageSet& w);

struct SimulationResult {
  bool success = false;
  std::vector<std::size_t> per_worker_symbols;
  std::size_t max_load_symbols = 0;
  /// (row, column) of F1 W entries that differ, 0-based.
  std::vector<std::pair<std::size_t, std::size_t>> mismatch_positions;
  double elapsed_seconds = 0.0;
  std::uint64_t seed = 0;
  std::size_t retries_used = 0;
  std::size_t kc_pieces = 0;
  std::size_t message_length = 0;
};

/// Encode with every worker, decode, and compare against reference_task.
SimulationResult evaluate(const Scheme& s, const MessageSet& w);

/// Builds with `seed`, draws messages from a child stream of `seed`.
SimulationResult run_trial(const Assignment& a, const Cost& cost, std::size_t length, std::uint64_t seed,
                           const PrimeField& field = PrimeField());

struct MonteCarloSummary {
  Cost cost;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::size_t total_retries = 0;
  std::size_t max_retries = 0;
  std::size_t min_load_symbols = 0;
  std::size_t max_load_symbols = 0;
  std::size_t message_length = 0;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;
};

/// Trial i uses derive_seed(seed, i).
MonteCarloSummary run_monte_carlo(const Assignment& a, const Cost& cost, std::size_t length,
                                  std::size_t trials, std::uint64_t seed,
                                  const PrimeField& field = PrimeField());

}  // namespace lsc
