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
#include <vector>

#include <nlohmann/json.hpp>

#include "lsc/field.h"

namespace lsc {

/// Dense row-major matrix over a prime field. Entries are stored as canonical
/// raw values; the owning field travels with the matrix so that operands from
/// different fields are rejected.
class Matrix {
 public:
  Matrix(const PrimeField& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(const PrimeField& field, std::size_t n);
  /// Values are reduced modulo the field; rows must be equal length.
  static Matrix from_rows(const PrimeField& field,
                          const std::vector<std::vector<std::uint64_t>>& rows);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  std::uint64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, std::uint64_t value);
  FieldElement element(std::size_t r, std::size_t c) const { return {field_, at(r, c)}; }

  std::span<const std::uint64_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const std::uint64_t> data() const { return data_; }

  Matrix transpose() const;
  Matrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
  Matrix select_rows(std::span<const std::size_t> row_idx) const;
  Matrix select_cols(std::span<const std::size_t> col_idx) const;
  /// Rows [first, first + count).
  Matrix row_range(std::size_t first, std::size_t count) const;

  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> data_;
};

/// Vertical concatenation; all parts must share field and column count.
/// An empty list gives a 0x0 matrix over `field`.
Matrix vstack(const PrimeField& field, std::span<const Matrix> parts);

Matrix matmul(const Matrix& lhs, const Matrix& rhs);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row, ascending
};

/// Reduced row echelon form with first-nonzero pivoting in column order.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis B, one vector per row, of {x : x * m = 0}; (rows - rank) x rows.
/// Built from the RREF of m^T with free variables in ascending index order.
Matrix left_null_space(const Matrix& m);

/// Throws SingularMatrixError (carrying the rank) if m is not invertible.
Matrix invert(const Matrix& m);

/// Solves a * x = b for square nonsingular a.
Matrix solve(const Matrix& a, const Matrix& b);

Matrix random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols, Rng& rng);

/// Cauchy matrix M(i, j) = 1 / (x_i - y_j) with x, y drawn as distinct field
/// elements. Every square submatrix is nonsingular. Requires modulus > rows + cols.
Matrix cauchy_mds(const PrimeField& field, std::size_t rows, std::size_t cols, Rng& rng);

/// JSON array-of-arrays of decimal strings.
nlohmann::json to_json(const Matrix& m);
Matrix matrix_from_json(const PrimeField& field, const nlohmann::json& j);

}  // namespace lsc
