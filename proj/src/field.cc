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

#include "lsc/field.h"

#include <array>
#include <string>

#include "lsc/errors.h"

namespace lsc {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus, bool allow_small) : modulus_(modulus) {
  if (!is_prime(modulus)) {
    throw UsageError("field modulus " + std::to_string(modulus) + " is not prime");
  }
  if (!allow_small && modulus < kMinDefaultModulus) {
    throw UsageError("field modulus " + std::to_string(modulus) +
                     " is below 2^31; pass allow_small for oracle-sized fields");
  }
}

std::uint64_t PrimeField::pow(std::uint64_t x, std::uint64_t e) const {
  return powmod(x, e, modulus_);
}

std::uint64_t PrimeField::inv(std::uint64_t x) const {
  if (x % modulus_ == 0) throw DivisionByZeroError("inverse of zero in F_" + std::to_string(modulus_));
  return powmod(x, modulus_ - 2, modulus_);
}

std::uint64_t PrimeField::from_signed(std::int64_t x) const {
  if (x >= 0) return static_cast<std::uint64_t>(x) % modulus_;
  // -(x+1) avoids overflow at INT64_MIN.
  const std::uint64_t mag = static_cast<std::uint64_t>(-(x + 1)) + 1;
  return neg(mag % modulus_);
}

std::uint64_t FieldElement::checked_modulus(const FieldElement& o) const {
  if (o.modulus_ != modulus_) {
    throw UsageError("mixed-field operands: F_" + std::to_string(modulus_) + " vs F_" +
                     std::to_string(o.modulus_));
  }
  return modulus_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  const std::uint64_t m = checked_modulus(o);
  return {m, value_ >= m - o.value_ ? value_ - (m - o.value_) : value_ + o.value_, 0};
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator*(const FieldElement& o) const {
  const std::uint64_t m = checked_modulus(o);
  return {m, mulmod(value_, o.value_, m), 0};
}

FieldElement FieldElement::operator-() const {
  return {modulus_, value_ == 0 ? 0 : modulus_ - value_, 0};
}

FieldElement FieldElement::inv() const {
  if (value_ == 0) throw DivisionByZeroError("inverse of zero in F_" + std::to_string(modulus_));
  return {modulus_, powmod(value_, modulus_ - 2, modulus_), 0};
}

FieldElement add(const FieldElement& x, const FieldElement& y) { return x + y; }
FieldElement mul(const FieldElement& x, const FieldElement& y) { return x * y; }
FieldElement neg(const FieldElement& x) { return -x; }
FieldElement inv(const FieldElement& x) { return x.inv(); }

FieldElement sample_uniform(const PrimeField& field, Rng& rng) {
  return FieldElement(field, field.sample(rng));
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.value(); }

}  // namespace lsc
