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

#include <array>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include "lsc/errors.h"
#include "lsc/field.h"

namespace lsc {
namespace {

using boost::multiprecision::cpp_int;

std::uint64_t big_mod(const cpp_int& x, std::uint64_t m) {
  cpp_int r = x % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

TEST(PrimeField, SmallInverseByHand) {
  const PrimeField f7(7, true);
  EXPECT_EQ(f7.inv(3), 5u);
  EXPECT_EQ(f7.mul(3, 5), 1u);
  EXPECT_EQ(inv(FieldElement(f7, 3)).value(), 5u);
}

TEST(PrimeField, InverseOfZeroThrows) {
  const PrimeField f7(7, true);
  EXPECT_THROW(f7.inv(0), DivisionByZeroError);
  EXPECT_THROW(FieldElement(PrimeField(), 0).inv(), DivisionByZeroError);
}

TEST(PrimeField, RejectsCompositeAndSmallModuli) {
  EXPECT_THROW(PrimeField(15, true), UsageError);
  EXPECT_THROW(PrimeField(1000003), UsageError);
  EXPECT_NO_THROW(PrimeField(1000003, true));
  EXPECT_THROW(PrimeField((std::uint64_t{1} << 61) + 1), UsageError);
}

TEST(IsPrime, MatchesTrialDivision) {
  auto trial = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  };
  for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), trial(n)) << n;
  EXPECT_TRUE(is_prime(kMersenne61));
  EXPECT_TRUE(is_prime(18446744073709551557ull));  // largest 64-bit prime
  EXPECT_FALSE(is_prime(3215031751ull));           // strong pseudoprime to 2,3,5,7
}

// Exhaustive against plain integer arithmetic in a small field.
TEST(PrimeField, ExhaustiveSmallField) {
  const std::uint64_t p = 101;
  const PrimeField f(p, true);
  for (std::uint64_t x = 0; x < p; ++x) {
    for (std::uint64_t y = 0; y < p; ++y) {
      ASSERT_EQ(f.add(x, y), (x + y) % p);
      ASSERT_EQ(f.sub(x, y), (x + p - y) % p);
      ASSERT_EQ(f.mul(x, y), x * y % p);
    }
    if (x != 0) ASSERT_EQ(f.mul(x, f.inv(x)), 1u);
  }
}

// Arbitrary-precision oracle on the default field.
TEST(PrimeField, MersenneAgainstBigInt) {
  const PrimeField f;
  const std::uint64_t m = f.modulus();
  Rng rng(2024);
  for (int i = 0; i < 20000; ++i) {
    const std::uint64_t x = rng.below(m);
    const std::uint64_t y = rng.below(m);
    ASSERT_EQ(f.add(x, y), big_mod(cpp_int(x) + y, m));
    ASSERT_EQ(f.sub(x, y), big_mod(cpp_int(x) - y, m));
    ASSERT_EQ(f.mul(x, y), big_mod(cpp_int(x) * y, m));
    ASSERT_EQ(f.neg(x), big_mod(-cpp_int(x), m));
    if (x != 0) ASSERT_EQ(big_mod(cpp_int(x) * f.inv(x), m), 1u);
  }
  EXPECT_EQ(f.from_signed(-1), m - 1);
  EXPECT_EQ(f.reduce(m), 0u);
}

TEST(PrimeField, AxiomsOnRandomTriples) {
  const PrimeField f;
  Rng rng(99);
  for (int i = 0; i < 5000; ++i) {
    const FieldElement a = sample_uniform(f, rng), b = sample_uniform(f, rng), c = sample_uniform(f, rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + (-a), FieldElement(f, 0));
    ASSERT_EQ(a - b + b, a);
    if (a.value() != 0) ASSERT_EQ(a * a.inv(), FieldElement(f, 1));
  }
}

TEST(FieldElement, MixedModuliRejected) {
  const FieldElement a(PrimeField(7, true), 3);
  const FieldElement b(PrimeField(11, true), 3);
  EXPECT_THROW(a + b, UsageError);
  EXPECT_THROW(a * b, UsageError);
  EXPECT_THROW(a - b, UsageError);
}

TEST(Sampling, DeterministicUnderSeed) {
  const PrimeField f;
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = f.sample(a);
    ASSERT_EQ(x, f.sample(b));
    differs |= x != f.sample(c);
  }
  EXPECT_TRUE(differs);
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_EQ(Rng(5).child(3).next(), Rng(derive_seed(5, 3)).next());
}

// Pearson chi-square over 16 equal-width buckets; 37.6973 is the 0.999
// quantile for 15 degrees of freedom.
TEST(Sampling, ChiSquareUniformity) {
  for (const std::uint64_t modulus : {kMersenne61, std::uint64_t{17}, std::uint64_t{2147483647}}) {
    const PrimeField f(modulus, true);
    Rng rng(7);
    constexpr int kBuckets = 16;
    constexpr int kDraws = 100000;
    std::array<double, kBuckets> count{};
    std::array<double, kBuckets> expected{};
    for (int b = 0; b < kBuckets; ++b) {
      // Exact share of [0, modulus) mapped to bucket b by v * 16 / modulus.
      const auto lo = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * modulus + kBuckets - 1) / kBuckets);
      const auto hi = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b + 1) * modulus + kBuckets - 1) / kBuckets);
      expected[b] = static_cast<double>(hi - lo) / static_cast<double>(modulus) * kDraws;
    }
    for (int i = 0; i < kDraws; ++i) {
      const std::uint64_t v = f.sample(rng);
      ++count[static_cast<std::size_t>(static_cast<unsigned __int128>(v) * kBuckets / modulus)];
    }
    double chi2 = 0;
    for (int b = 0; b < kBuckets; ++b) {
      if (expected[b] == 0) continue;
      chi2 += (count[b] - expected[b]) * (count[b] - expected[b]) / expected[b];
    }
    EXPECT_LT(chi2, 37.6973) << "modulus " << modulus;
  }
}

}  // namespace
}  // namespace lsc
