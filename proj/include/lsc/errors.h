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
#include <stdexcept>
#include <string>
#include <vector>

namespace lsc {

/// Caller violated an API precondition (mixed fields, bad index, bad shape).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed assignment text or cost string. Line/column are 1-based; 0 means n/a.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that breaks a model invariant (e.g. a dataset nobody holds).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZeroError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& what, std::size_t rank)
      : std::runtime_error(what), rank_(rank) {}

  std::size_t rank() const { return rank_; }

 private:
  std::size_t rank_;
};

/// Subset enumeration or oracle asked to exceed its configured size cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Randomized scheme construction gave up after the retry cap.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(const std::string& what, std::string stage, std::uint64_t final_seed)
      : std::runtime_error(what), stage_(std::move(stage)), final_seed_(final_seed) {}

  const std::string& stage() const { return stage_; }
  std::uint64_t final_seed() const { return final_seed_; }

 private:
  std::string stage_;
  std::uint64_t final_seed_;
};

/// The deterministic realization hit a Hall violation. `columns` are 1-based
/// virtual dataset indices of the deficient set for `worker` (1-based).
class StructuralFailure : public std::runtime_error {
 public:
  StructuralFailure(const std::string& what, std::size_t worker, std::vector<std::size_t> columns)
      : std::runtime_error(what), worker_(worker), columns_(std::move(columns)) {}

  std::size_t worker() const { return worker_; }
  const std::vector<std::size_t>& columns() const { return columns_; }

 private:
  std::size_t worker_;
  std::vector<std::size_t> columns_;
};

/// Master did not receive what the protocol requires.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lsc
