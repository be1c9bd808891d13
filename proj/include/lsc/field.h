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

#include <cstdint>
#include <ostream>

#include "lsc/random.h"

namespace lsc {

// GCC/Clang extension; keeps -Wpedantic quiet.
__extension__ using uint128 = unsigned __int128;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;
inline constexpr std::uint64_t kMinDefaultModulus = std::uint64_t{1} << 31;

/// A prime field F_a. Holds only the modulus, so it is a cheap value type;
/// the raw-value helpers below are the hot path used by Matrix.
class PrimeField {
 public:
  /// Throws UsageError unless `modulus` is prime and, without `allow_small`,
  /// at least 2^31. Small fields exist for hand-checkable oracle tests.
  explicit PrimeField(std::uint64_t modulus = kMersenne61, bool allow_small = false);

  std::uint64_t modulus() const { return modulus_; }

  std::uint64_t add(std::uint64_t x, std::uint64_t y) const {
    return x >= modulus_ - y ? x - (modulus_ - y) : x + y;
  }
  std::uint64_t sub(std::uint64_t x, std::uint64_t y) const {
    return x >= y ? x - y : x + (modulus_ - y);
  }
  std::uint64_t neg(std::uint64_t x) const { return x == 0 ? 0 : modulus_ - x; }
  std::uint64_t mul(std::uint64_t x, std::uint64_t y) const {
    return static_cast<std::uint64_t>(static_cast<uint128>(x) * y % modulus_);
  }
  std::uint64_t pow(std::uint64_t x, std::uint64_t e) const;
  /// Fermat inverse. Throws DivisionByZeroError on 0.
  std::uint64_t inv(std::uint64_t x) const;

  /// Reduces an arbitrary integer into [0, modulus).
  std::uint64_t reduce(std::uint64_t x) const { return x % modulus_; }
  std::uint64_t from_signed(std::int64_t x) const;

  std::uint64_t sample(Rng& rng) const { return rng.below(modulus_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t modulus_;
};

/// A canonical element of a specific prime field. Arithmetic between elements
/// of different fields throws UsageError.
class FieldElement {
 public:
  FieldElement(const PrimeField& field, std::uint64_t value)
      : modulus_(field.modulus()), value_(field.reduce(value)) {}

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inv() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  FieldElement(std::uint64_t modulus, std::uint64_t value, int) : modulus_(modulus), value_(value) {}
  std::uint64_t checked_modulus(const FieldElement& o) const;

  std::uint64_t modulus_;
  std::uint64_t value_;
};

FieldElement add(const FieldElement& x, const FieldElement& y);
FieldElement mul(const FieldElement& x, const FieldElement& y);
FieldElement neg(const FieldElement& x);
FieldElement inv(const FieldElement& x);
FieldElement sample_uniform(const PrimeField& field, Rng& rng);

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace lsc
