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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lsc/assignment.h"
#include "lsc/field.h"
#include "lsc/matrix.h"

namespace lsc {

inline constexpr std::size_t kDefaultRetryCap = 16;

/// A constructed coding scheme at cost p/q.
///
/// Messages are split into q pieces, giving qK virtual datasets; virtual
/// column j carries piece j / K of dataset (j mod K) + 1. F = [F1; F2] is
/// pN x qK with F1 the first `kc_pieces` rows (the task). Worker n sends
/// S_n F W, i.e. E_n W with E_n = S_n F.
struct Scheme {
  Assignment assignment;
  Cost cost;
  PrimeField field;
  std::size_t kc_pieces;
  IndexSet g_prime;
  std::size_t t;
  Matrix f;                  // pN x qK
  std::vector<Matrix> s;     // N encoders, p x pN
  std::vector<Matrix> e;     // N effective encoders, p x qK
  Matrix stack_inverse;      // [S_1; ...; S_N]^-1
  Matrix decoder;            // first kc_pieces rows of stack_inverse
  std::uint64_t seed;
  std::size_t retries_used;

  std::size_t p() const { return static_cast<std::size_t>(cost.p()); }
  std::size_t q() const { return static_cast<std::size_t>(cost.q()); }
  std::size_t total_rows() const { return p() * assignment.n_workers(); }
  std::size_t virtual_datasets() const { return q() * assignment.n_datasets(); }
  Matrix f1() const { return f.row_range(0, kc_pieces); }
  Matrix f2() const { return f.row_range(kc_pieces, total_rows() - kc_pieces); }
  Matrix stack() const { return vstack(field, s); }
};

struct BuildOptions {
  std::size_t retry_cap = kDefaultRetryCap;
};

/// Randomized construction. Each attempt draws from derive_seed(seed, attempt);
/// a singular column system, thin null space or rank-deficient stack rerolls.
/// Throws ConstructionError once the retry cap is exhausted.
Scheme build(const Assignment& a, const Cost& cost, std::uint64_t seed,
             const PrimeField& field = PrimeField(), BuildOptions options = {});

/// Fills the unknown entries of one column of F so that s_prime * column = 0.
/// `fixed_rows`/`fixed_values` give the known entries; `var_rows` the unknowns,
/// whose count must equal s_prime.rows(). Returns the full column. Throws
/// SingularMatrixError when s_prime(., var_rows) is singular.
std::vector<std::uint64_t> column_solver(const Matrix& s_prime, std::span<const std::size_t> fixed_rows,
                                         std::span<const std::uint64_t> fixed_values,
                                         std::span<const std::size_t> var_rows);

struct EncodabilityReport {
  /// (worker, virtual column), both 1-based, where E_n is nonzero.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
  std::size_t checked_columns = 0;
  bool ok() const { return violations.empty(); }
};

EncodabilityReport verify_encodability(const Scheme& s);

struct DecodabilityReport {
  std::size_t rank = 0;
  std::size_t required = 0;
  bool recovers_task = false;  // decoder * stack * F == F1
  bool ok() const { return rank == required && recovers_task; }
};

DecodabilityReport verify_decodability(const Scheme& s);

struct WorkerTransversal {
  std::size_t worker;             // 1-based
  IndexSet columns;               // 1-based virtual columns (extended complement)
  std::vector<std::size_t> rows;  // 1-based rows of F picked for those columns
};

/// Deterministic-structure witness that the randomized stack is generically
/// full rank on this instance.
struct CertificateWitness {
  Cost cost;
  IndexSet g_prime;
  std::size_t t;
  bool mds_branch;                       // |G'| > t: S_{G'} = [0 | M], M Cauchy
  std::vector<std::size_t> stack_order;  // workers outside G' first, then G', both ascending
  Matrix f;                              // blockdiag(I, M^-1) * repeated-pattern rows
  std::vector<Matrix> s;                 // per worker, natural order
  Matrix stack;                          // S stacked in stack_order
  std::size_t stack_rank;
  bool stack_is_identity;
  std::vector<WorkerTransversal> transversals;
  std::size_t solved_columns;            // columns reproduced by column_solver
  std::uint64_t seed;
  std::size_t retries_used;
};

/// Throws StructuralFailure on a Hall violation, ConstructionError if the
/// random star entries keep producing a singular transversal minor.
CertificateWitness certificate_realization(const Assignment& a, const Cost& cost, std::uint64_t seed,
                                           const PrimeField& field = PrimeField(),
                                           BuildOptions options = {});

}  // namespace lsc
