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

#include "lsc/matrix.h"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "lsc/errors.h"

namespace lsc {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
  if (!(a.field() == b.field())) throw UsageError(std::string(op) + ": operands from different fields");
}

// In-place Gauss-Jordan on a row-major buffer. Only the first `pivot_cols`
// columns are eligible as pivots; the rest ride along (augmented part).
std::vector<std::size_t> eliminate(const PrimeField& f, std::vector<std::uint64_t>& a,
                                   std::size_t rows, std::size_t cols, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap_ranges(a.begin() + p * cols, a.begin() + (p + 1) * cols, a.begin() + r * cols);
    }
    const std::uint64_t inv = f.inv(a[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint64_t factor = a[i * cols + c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix Matrix::identity(const PrimeField& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(const PrimeField& field,
                         const std::vector<std::vector<std::uint64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw UsageError("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.data_[i * cols + j] = field.reduce(rows[i][j]);
  }
  return m;
}

std::uint64_t Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw UsageError("Matrix::at(" + std::to_string(r) + ", " + std::to_string(c) +
                     ") out of range for " + shape(*this));
  }
  return data_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, std::uint64_t value) {
  if (r >= rows_ || c >= cols_) {
    throw UsageError("Matrix::set(" + std::to_string(r) + ", " + std::to_string(c) +
                     ") out of range for " + shape(*this));
  }
  data_[r * cols_ + c] = field_.reduce(value);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  return t;
}

Matrix Matrix::select(std::span<const std::size_t> row_idx,
                      std::span<const std::size_t> col_idx) const {
  Matrix s(field_, row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    for (std::size_t j = 0; j < col_idx.size(); ++j) {
      s.data_[i * col_idx.size() + j] = at(row_idx[i], col_idx[j]);
    }
  }
  return s;
}

Matrix Matrix::select_rows(std::span<const std::size_t> row_idx) const {
  Matrix s(field_, row_idx.size(), cols_);
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    if (row_idx[i] >= rows_) throw UsageError("Matrix::select_rows: index out of range");
    std::copy_n(data_.begin() + row_idx[i] * cols_, cols_, s.data_.begin() + i * cols_);
  }
  return s;
}

Matrix Matrix::select_cols(std::span<const std::size_t> col_idx) const {
  Matrix s(field_, rows_, col_idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j) s.data_[i * col_idx.size() + j] = at(i, col_idx[j]);
  return s;
}

Matrix Matrix::row_range(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw UsageError("Matrix::row_range out of range for " + shape(*this));
  Matrix s(field_, count, cols_);
  std::copy_n(data_.begin() + first * cols_, count * cols_, s.data_.begin());
  return s;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint64_t v) { return v == 0; });
}

Matrix vstack(const PrimeField& field, std::span<const Matrix> parts) {
  if (parts.empty()) return Matrix(field, 0, 0);
  const std::size_t cols = parts.front().cols();
  std::size_t rows = 0;
  for (const Matrix& p : parts) {
    if (!(p.field() == field)) throw UsageError("vstack: operands from different fields");
    if (p.cols() != cols) throw UsageError("vstack: column counts differ");
    rows += p.rows();
  }
  Matrix out(field, rows, cols);
  std::size_t r = 0;
  for (const Matrix& p : parts) {
    for (std::size_t i = 0; i < p.rows(); ++i, ++r)
      for (std::size_t j = 0; j < cols; ++j) out.set(r, j, p(i, j));
  }
  return out;
}

Matrix matmul(const Matrix& lhs, const Matrix& rhs) {
  require_same_field(lhs, rhs, "matmul");
  if (lhs.cols() != rhs.rows()) {
    throw UsageError("matmul: shape mismatch " + shape(lhs) + " * " + shape(rhs));
  }
  const PrimeField& f = lhs.field();
  std::vector<std::uint64_t> acc(lhs.rows() * rhs.cols(), 0);
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const std::uint64_t a = lhs(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        acc[i * rhs.cols() + j] = f.add(acc[i * rhs.cols() + j], f.mul(a, rhs(k, j)));
      }
    }
  }
  Matrix out(f, lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out.set(i, j, acc[i * out.cols() + j]);
  return out;
}

RowEchelon rref(const Matrix& m) {
  std::vector<std::uint64_t> buf(m.data().begin(), m.data().end());
  auto pivots = eliminate(m.field(), buf, m.rows(), m.cols(), m.cols());
  Matrix reduced(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) reduced.set(i, j, buf[i * m.cols() + j]);
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  std::vector<std::uint64_t> buf(m.data().begin(), m.data().end());
  return eliminate(m.field(), buf, m.rows(), m.cols(), m.cols()).size();
}

Matrix left_null_space(const Matrix& m) {
  // x * m = 0  <=>  m^T * x^T = 0: solve the right null space of m^T.
  const RowEchelon e = rref(m.transpose());
  const std::size_t n = m.rows();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;

  Matrix basis(m.field(), n - e.pivots.size(), n);
  std::size_t b = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis.set(b, free, 1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      basis.set(b, e.pivots[i], m.field().neg(e.reduced(i, free)));
    }
    ++b;
  }
  return basis;
}

Matrix invert(const Matrix& m) {
  if (m.rows() != m.cols()) throw UsageError("invert: matrix is " + shape(m) + ", not square");
  const std::size_t n = m.rows();
  return solve(m, Matrix::identity(m.field(), n));
}

Matrix solve(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "solve");
  if (a.rows() != a.cols()) throw UsageError("solve: coefficient matrix is " + shape(a) + ", not square");
  if (b.rows() != a.rows()) throw UsageError("solve: shape mismatch " + shape(a) + " vs " + shape(b));
  const std::size_t n = a.rows();
  const std::size_t w = n + b.cols();
  std::vector<std::uint64_t> buf(n * w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) buf[i * w + j] = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) buf[i * w + n + j] = b(i, j);
  }
  const auto pivots = eliminate(a.field(), buf, n, w, n);
  if (pivots.size() != n) {
    throw SingularMatrixError("singular " + shape(a) + " matrix (rank " +
                                  std::to_string(pivots.size()) + ")",
                              pivots.size());
  }
  Matrix x(a.field(), n, b.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(i, j, buf[i * w + n + j]);
  return x;
}

Matrix random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, field.sample(rng));
  return m;
}

Matrix cauchy_mds(const PrimeField& field, std::size_t rows, std::size_t cols, Rng& rng) {
  if (field.modulus() <= rows + cols) {
    throw UsageError("cauchy_mds: field F_" + std::to_string(field.modulus()) + " too small for " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  }
  // rows + cols distinct points: the first `rows` are x's, the rest y's.
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::uint64_t> points;
  while (points.size() < rows + cols) {
    const std::uint64_t v = field.sample(rng);
    if (seen.insert(v).second) points.push_back(v);
  }
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, field.inv(field.sub(points[i], points[rows + j])));
  return m;
}

nlohmann::json to_json(const Matrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(std::to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix matrix_from_json(const PrimeField& field, const nlohmann::json& j) {
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& row : j) {
    auto& r = rows.emplace_back();
    for (const auto& cell : row) r.push_back(std::stoull(cell.get<std::string>()));
  }
  return Matrix::from_rows(field, rows);
}

}  // namespace lsc
