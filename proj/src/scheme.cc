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

#include "lsc/scheme.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "lsc/errors.h"
#include "lsc/structure.h"

namespace lsc {

namespace {

// Thrown inside one attempt; the retry loop catches it and rerolls.
struct AttemptFailed {
  std::string stage;
  std::string detail;
};

// k random distinct elements of `pool`, in the order drawn.
std::vector<std::size_t> choose(std::vector<std::size_t> pool, std::size_t k, Rng& rng) {
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

std::vector<std::size_t> zero_based(const IndexSet& s) {
  std::vector<std::size_t> out(s.size());
  std::transform(s.begin(), s.end(), out.begin(), [](std::size_t i) { return i - 1; });
  return out;
}

// Workers of G' that do not hold `dataset`, as positions in the G' list.
std::vector<std::size_t> blocked_in_gprime(const Assignment& a, const IndexSet& g_prime,
                                           std::size_t dataset) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g_prime.size(); ++i)
    if (!a.holds(g_prime[i], dataset)) out.push_back(i);
  return out;
}

void require_buildable(const Assignment& a, const Cost& cost) {
  if (!a.cost_in_range(cost)) throw UsageError("cost " + cost.str() + " outside (0, max_n |S_n|]");
  if (a.replication() == 0) throw UsageError("cannot build a scheme when a dataset has no holder");
}

Scheme build_attempt(const Assignment& a, const Cost& cost, const StructureReport& rep,
                     const PrimeField& field, Rng& rng) {
  const std::size_t n = a.n_workers();
  const std::size_t k = a.n_datasets();
  const std::size_t p = static_cast<std::size_t>(cost.p());
  const std::size_t q = static_cast<std::size_t>(cost.q());
  const std::size_t rows = p * n;
  const std::size_t cols = q * k;
  const std::size_t kc = static_cast<std::size_t>(rep.achievable_pieces);
  const std::size_t var_start = rows - p * rep.t;
  const IndexSet& gp = rep.g_prime;

  Matrix f(field, rows, cols);
  for (std::size_t i = 0; i < kc; ++i)
    for (std::size_t j = 0; j < cols; ++j) f.set(i, j, field.sample(rng));

  std::vector<std::optional<Matrix>> s(n);
  for (std::size_t w : gp) s[w - 1] = random_matrix(field, p, rows, rng);

  std::vector<std::size_t> tail(rows - var_start);
  std::iota(tail.begin(), tail.end(), var_start);
  for (std::size_t j = 0; j < cols; ++j) {
    const std::size_t dataset = j % k + 1;
    const auto blocked = blocked_in_gprime(a, gp, dataset);
    const std::vector<std::size_t> var_rows = choose(tail, p * blocked.size(), rng);

    std::vector<bool> is_var(rows, false);
    for (std::size_t r : var_rows) is_var[r] = true;
    std::vector<std::size_t> fixed_rows;
    std::vector<std::uint64_t> fixed_values;
    for (std::size_t r = 0; r < rows; ++r) {
      if (is_var[r]) continue;
      if (r >= kc) f.set(r, j, field.sample(rng));
      fixed_rows.push_back(r);
      fixed_values.push_back(f(r, j));
    }
    if (var_rows.empty()) continue;

    std::vector<Matrix> parts;
    for (std::size_t i : blocked) parts.push_back(*s[gp[i] - 1]);
    const Matrix s_prime = vstack(field, parts);
    try {
      const auto column = column_solver(s_prime, fixed_rows, fixed_values, var_rows);
      for (std::size_t r : var_rows) f.set(r, j, column[r]);
    } catch (const SingularMatrixError& e) {
      throw AttemptFailed{"column_solve", "column " + std::to_string(j + 1) + ": " + e.what()};
    }
  }

  for (std::size_t w = 1; w <= n; ++w) {
    if (s[w - 1]) continue;
    const Matrix restricted = f.select_cols(zero_based(a.extended_complement(w, q)));
    const Matrix basis = left_null_space(restricted);
    if (basis.rows() < p) {
      throw AttemptFailed{"null_space", "worker " + std::to_string(w) + ": left null space has dimension " +
                                            std::to_string(basis.rows()) + " < " + std::to_string(p)};
    }
    Matrix enc = matmul(random_matrix(field, p, basis.rows(), rng), basis);
    if (rank(enc) != p) {
      throw AttemptFailed{"null_space", "worker " + std::to_string(w) + ": sampled encoder is rank deficient"};
    }
    s[w - 1] = std::move(enc);
  }

  std::vector<Matrix> encoders;
  for (auto& m : s) encoders.push_back(std::move(*m));
  const Matrix stacked = vstack(field, encoders);
  std::optional<Matrix> inverse;
  try {
    inverse = invert(stacked);
  } catch (const SingularMatrixError& e) {
    throw AttemptFailed{"decodability", std::string("stacked encoders: ") + e.what()};
  }

  std::vector<Matrix> effective;
  for (const Matrix& m : encoders) effective.push_back(matmul(m, f));
  Matrix decoder = inverse->row_range(0, kc);
  return Scheme{a,  cost,          field,     kc, gp, rep.t, std::move(f), std::move(encoders),
                std::move(effective), std::move(*inverse), std::move(decoder), 0, 0};
}

}  // namespace

std::vector<std::uint64_t> column_solver(const Matrix& s_prime, std::span<const std::size_t> fixed_rows,
                                         std::span<const std::uint64_t> fixed_values,
                                         std::span<const std::size_t> var_rows) {
  const PrimeField& field = s_prime.field();
  const std::size_t len = s_prime.cols();
  if (fixed_rows.size() != fixed_values.size()) throw UsageError("column_solver: fixed rows/values differ in length");
  if (var_rows.size() != s_prime.rows()) {
    throw UsageError("column_solver: " + std::to_string(var_rows.size()) + " unknowns for " +
                     std::to_string(s_prime.rows()) + " equations");
  }
  if (fixed_rows.size() + var_rows.size() != len) throw UsageError("column_solver: rows do not cover the column");

  std::vector<std::uint64_t> column(len, 0);
  std::vector<bool> covered(len, false);
  for (std::size_t i = 0; i < fixed_rows.size(); ++i) {
    column.at(fixed_rows[i]) = field.reduce(fixed_values[i]);
    covered[fixed_rows[i]] = true;
  }
  for (std::size_t r : var_rows) {
    if (r >= len || covered[r]) throw UsageError("column_solver: overlapping or out-of-range rows");
    covered[r] = true;
  }
  if (var_rows.empty()) return column;

  // S'(., V) x = -S'(., F) f_F
  Matrix rhs(field, s_prime.rows(), 1);
  for (std::size_t i = 0; i < s_prime.rows(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t r : fixed_rows) acc = field.add(acc, field.mul(s_prime(i, r), column[r]));
    rhs.set(i, 0, field.neg(acc));
  }
  const Matrix x = solve(s_prime.select_cols(var_rows), rhs);
  for (std::size_t i = 0; i < var_rows.size(); ++i) column[var_rows[i]] = x(i, 0);
  return column;
}

Scheme build(const Assignment& a, const Cost& cost, std::uint64_t seed, const PrimeField& field,
             BuildOptions options) {
  require_buildable(a, cost);
  const StructureReport rep = analyze(a, cost);
  AttemptFailed last{"none", ""};
  std::uint64_t attempt_seed = seed;
  for (std::size_t attempt = 0; attempt <= options.retry_cap; ++attempt) {
    attempt_seed = derive_seed(seed, attempt);
    Rng rng(attempt_seed);
    try {
      Scheme s = build_attempt(a, cost, rep, field, rng);
      s.seed = seed;
      s.retries_used = attempt;
      return s;
    } catch (const AttemptFailed& f) {
      last = f;
    }
  }
  throw ConstructionError("scheme construction failed after " + std::to_string(options.retry_cap) +
                              " retries at stage '" + last.stage + "': " + last.detail,
                          last.stage, attempt_seed);
}

EncodabilityReport verify_encodability(const Scheme& s) {
  EncodabilityReport rep;
  for (std::size_t w = 1; w <= s.assignment.n_workers(); ++w) {
    const Matrix& e = s.e[w - 1];
    for (std::size_t col : s.assignment.extended_complement(w, s.q())) {
      ++rep.checked_columns;
      for (std::size_t i = 0; i < e.rows(); ++i) {
        if (e(i, col - 1) != 0) {
          rep.violations.emplace_back(w, col);
          break;
        }
      }
    }
  }
  return rep;
}

DecodabilityReport verify_decodability(const Scheme& s) {
  DecodabilityReport rep;
  const Matrix stacked = s.stack();
  rep.required = s.total_rows();
  rep.rank = rank(stacked);
  if (s.decoder.cols() == stacked.rows()) {
    rep.recovers_task = matmul(matmul(s.decoder, stacked), s.f) == s.f1();
  }
  return rep;
}

namespace {

CertificateWitness certificate_attempt(const Assignment& a, const Cost& cost, const StructureReport& rep,
                                       const PrimeField& field, Rng& rng) {
  const std::size_t n = a.n_workers();
  const std::size_t k = a.n_datasets();
  const std::size_t p = static_cast<std::size_t>(cost.p());
  const std::size_t q = static_cast<std::size_t>(cost.q());
  const std::size_t rows = p * n;
  const std::size_t cols = q * k;
  const IndexSet& gp = rep.g_prime;
  const bool mds = gp.size() > rep.t;

  std::vector<std::size_t> order;
  for (std::size_t w = 1; w <= n; ++w)
    if (!std::binary_search(gp.begin(), gp.end(), w)) order.push_back(w);
  const std::size_t outside = order.size();
  order.insert(order.end(), gp.begin(), gp.end());
  const std::size_t top = p * outside;

  // Each worker's row of A repeated p times, stars drawn at random.
  Matrix pattern(field, rows, cols);
  std::vector<std::vector<bool>> structural_zero(rows, std::vector<bool>(cols, true));
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (!a.holds(order[b], j % k + 1)) continue;
        pattern.set(b * p + i, j, field.sample(rng));
        structural_zero[b * p + i][j] = false;
      }
    }
  }

  const std::size_t inner = rows - top;
  const Matrix m = mds ? cauchy_mds(field, inner, inner, rng) : Matrix::identity(field, inner);
  const Matrix m_inv = invert(m);

  // F = blockdiag(I, M^-1) * pattern
  Matrix f = pattern;
  {
    std::vector<std::size_t> bottom(inner);
    std::iota(bottom.begin(), bottom.end(), top);
    const Matrix mixed = matmul(m_inv, pattern.select_rows(bottom));
    for (std::size_t i = 0; i < inner; ++i)
      for (std::size_t j = 0; j < cols; ++j) f.set(top + i, j, mixed(i, j));
  }

  std::vector<std::optional<Matrix>> s(n);
  for (std::size_t i = 0; i < gp.size(); ++i) {
    Matrix enc(field, p, rows);
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t c = 0; c < inner; ++c) enc.set(r, top + c, m(i * p + r, c));
    s[gp[i] - 1] = std::move(enc);
  }

  // Re-derive the G' rows of every column through the column solver.
  std::size_t solved = 0;
  std::vector<std::size_t> tail(p * rep.t);
  std::iota(tail.begin(), tail.end(), rows - p * rep.t);
  for (std::size_t j = 0; j < cols; ++j) {
    const auto blocked = blocked_in_gprime(a, gp, j % k + 1);
    if (blocked.empty()) continue;
    std::vector<Matrix> parts;
    std::vector<std::size_t> var_rows;
    for (std::size_t i : blocked) {
      parts.push_back(*s[gp[i] - 1]);
      for (std::size_t r = 0; r < p; ++r) var_rows.push_back(top + i * p + r);
    }
    if (mds) var_rows = choose(tail, var_rows.size(), rng);
    std::sort(var_rows.begin(), var_rows.end());
    std::vector<std::size_t> fixed_rows;
    std::vector<std::uint64_t> fixed_values;
    for (std::size_t r = 0; r < rows; ++r) {
      if (std::binary_search(var_rows.begin(), var_rows.end(), r)) continue;
      fixed_rows.push_back(r);
      fixed_values.push_back(f(r, j));
    }
    const auto column = column_solver(vstack(field, parts), fixed_rows, fixed_values, var_rows);
    for (std::size_t r : var_rows) {
      if (column[r] != f(r, j)) throw std::logic_error("certificate: column solver disagrees with F");
    }
    ++solved;
  }

  std::vector<WorkerTransversal> transversals;
  for (std::size_t b = 0; b < outside; ++b) {
    const std::size_t w = order[b];
    const IndexSet ext = a.extended_complement(w, q);
    const auto ext0 = zero_based(ext);
    std::vector<std::size_t> other_rows;
    for (std::size_t r = 0; r < rows; ++r)
      if (r / p != b) other_rows.push_back(r);

    std::vector<std::vector<bool>> zeros(other_rows.size(), std::vector<bool>(ext0.size()));
    for (std::size_t i = 0; i < other_rows.size(); ++i)
      for (std::size_t j = 0; j < ext0.size(); ++j) zeros[i][j] = structural_zero[other_rows[i]][ext0[j]];
    const Transversal tr = hall_transversal(zeros, ext0.size());
    if (!tr.feasible) {
      IndexSet deficient;
      for (std::size_t j : tr.deficient_columns) deficient.push_back(ext[j]);
      throw StructuralFailure("Hall condition fails for worker " + std::to_string(w), w, deficient);
    }
    std::vector<std::size_t> d;
    for (std::size_t j = 0; j < ext0.size(); ++j) d.push_back(other_rows[tr.rows[j]]);

    // S(., D) P(D, cols) = -P(block, cols); the right side is zero by construction.
    Matrix enc(field, p, rows);
    for (std::size_t r = 0; r < p; ++r) enc.set(r, b * p + r, 1);
    if (!d.empty()) {
      const Matrix minor = pattern.select(d, ext0);
      std::vector<std::size_t> block(p);
      std::iota(block.begin(), block.end(), b * p);
      Matrix rhs = pattern.select(block, ext0).transpose();
      for (std::size_t i = 0; i < rhs.rows(); ++i)
        for (std::size_t c = 0; c < rhs.cols(); ++c) rhs.set(i, c, field.neg(rhs(i, c)));
      Matrix x(field, 0, 0);
      try {
        x = solve(minor.transpose(), rhs);
      } catch (const SingularMatrixError&) {
        throw AttemptFailed{"transversal_minor",
                            "worker " + std::to_string(w) + ": transversal minor is singular"};
      }
      for (std::size_t r = 0; r < p; ++r)
        for (std::size_t i = 0; i < d.size(); ++i) enc.set(r, d[i], field.add(enc(r, d[i]), x(i, r)));
      if (rank(f.select_cols(ext0)) != ext0.size()) {
        throw AttemptFailed{"column_rank", "worker " + std::to_string(w) + ": F restricted is not column full rank"};
      }
    }
    if (!matmul(enc, f.select_cols(ext0)).is_zero()) {
      throw std::logic_error("certificate: encoder for worker " + std::to_string(w) + " is not zero-forcing");
    }
    std::vector<std::size_t> d1(d.size());
    std::transform(d.begin(), d.end(), d1.begin(), [](std::size_t r) { return r + 1; });
    transversals.push_back({w, ext, std::move(d1)});
    s[w - 1] = std::move(enc);
  }

  std::vector<Matrix> encoders;
  for (auto& e : s) encoders.push_back(std::move(*e));
  for (std::size_t w = 1; w <= n; ++w) {
    if (!matmul(encoders[w - 1], f.select_cols(zero_based(a.extended_complement(w, q)))).is_zero()) {
      throw std::logic_error("certificate: worker " + std::to_string(w) + " violates encodability");
    }
  }
  std::vector<Matrix> ordered;
  for (std::size_t w : order) ordered.push_back(encoders[w - 1]);
  Matrix stacked = vstack(field, ordered);
  const std::size_t stack_rank = rank(stacked);
  const bool identity = stacked == Matrix::identity(field, rows);

  return CertificateWitness{cost, gp, rep.t, mds, std::move(order), std::move(f), std::move(encoders),
                            std::move(stacked), stack_rank, identity, std::move(transversals), solved, 0, 0};
}

}  // namespace

CertificateWitness certificate_realization(const Assignment& a, const Cost& cost, std::uint64_t seed,
                                           const PrimeField& field, BuildOptions options) {
  require_buildable(a, cost);
  const StructureReport rep = analyze(a, cost);
  AttemptFailed last{"none", ""};
  std::uint64_t attempt_seed = seed;
  for (std::size_t attempt = 0; attempt <= options.retry_cap; ++attempt) {
    attempt_seed = derive_seed(seed, attempt);
    Rng rng(attempt_seed);
    try {
      CertificateWitness w = certificate_attempt(a, cost, rep, field, rng);
      w.seed = seed;
      w.retries_used = attempt;
      return w;
    } catch (const AttemptFailed& f) {
      last = f;
    }
  }
  throw ConstructionError("certificate realization failed at stage '" + last.stage + "': " + last.detail,
                          last.stage, attempt_seed);
}

}  // namespace lsc
