/*
   Copyright 2026 The waring-sigma Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <set>

#include <gtest/gtest.h>

#include <waring/field.hpp>

using namespace waring;

namespace {

constexpr std::uint64_t mersenne31 = 2147483647ULL;

bool trial_division(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t k = 2; k * k <= n; ++k) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST(Primality, MatchesTrialDivisionBelowTwentyThousand)
{
    for (std::uint64_t n = 0; n < 20000; ++n) {
        ASSERT_EQ(is_prime(n), trial_division(n)) << n;
    }
}

TEST(Primality, MatchesTrialDivisionNearTwoToThirty)
{
    for (std::uint64_t n = (1ULL << 30) + 1; n < (1ULL << 30) + 3000; ++n) {
        ASSERT_EQ(is_prime(n), trial_division(n)) << n;
    }
}

TEST(Primality, StrongPseudoprimesAreRejected)
{
    // Strong pseudoprimes to several small bases.
    EXPECT_FALSE(is_prime(2047));
    EXPECT_FALSE(is_prime(3215031751ULL));
    EXPECT_FALSE(is_prime(3825123056546413051ULL));
    EXPECT_TRUE(is_prime(mersenne31));
    EXPECT_TRUE(is_prime(18446744073709551557ULL));
}

TEST(PrimeModulus, RejectsOutOfRangeOrComposite)
{
    EXPECT_THROW(PrimeModulus(7), std::invalid_argument);
    EXPECT_THROW(PrimeModulus((1ULL << 31) + 11), std::invalid_argument);
    EXPECT_THROW(PrimeModulus(mersenne31 - 2), std::invalid_argument);
    EXPECT_NO_THROW(PrimeModulus{mersenne31});
}

TEST(PrimeModulus, ReduceAgreesWithRemainder)
{
    const PrimeModulus p(mersenne31);
    SeededRng rng(3);
    for (int i = 0; i < 100000; ++i) {
        const std::uint64_t x = rng.next();
        ASSERT_EQ(p.reduce(x), x % mersenne31);
    }
    EXPECT_EQ(p.reduce(~0ULL), (~0ULL) % mersenne31);
    EXPECT_EQ(p.reduce(mersenne31), 0U);
}

TEST(PrimeModulus, ArithmeticAgreesWithWideIntegers)
{
    const PrimeModulus p(1073741827ULL);
    ASSERT_TRUE(is_prime(1073741827ULL));
    SeededRng rng(11);
    for (int i = 0; i < 20000; ++i) {
        const auto a = static_cast<FieldElement>(rng.below(p.value()));
        const auto b = static_cast<FieldElement>(rng.below(p.value()));
        const auto c = static_cast<FieldElement>(rng.below(p.value()));
        ASSERT_EQ(p.add(a, b), (std::uint64_t{a} + b) % p.value());
        ASSERT_EQ(p.sub(a, b), (std::uint64_t{a} + p.value() - b) % p.value());
        ASSERT_EQ(p.mul(a, b), (std::uint64_t{a} * b) % p.value());
        ASSERT_EQ(p.mul_add(c, a, b), (std::uint64_t{a} * b + c) % p.value());
        ASSERT_EQ(p.add(a, p.neg(a)), 0U);
        if (a != 0) {
            ASSERT_EQ(p.mul(a, p.inv(a)), 1U);
        }
    }
}

TEST(PrimeModulus, SignedConversion)
{
    const PrimeModulus p(mersenne31);
    EXPECT_EQ(p.from_int(-1), mersenne31 - 1);
    EXPECT_EQ(p.from_int(-static_cast<std::int64_t>(mersenne31)), 0U);
    EXPECT_EQ(p.from_int(5), 5U);
}

TEST(PrimeModulus, PowerAndFermat)
{
    const PrimeModulus p(mersenne31);
    FieldElement acc = 1;
    for (unsigned e = 0; e < 40; ++e) {
        ASSERT_EQ(p.pow(3, e), acc);
        acc = p.mul(acc, 3);
    }
    EXPECT_EQ(p.pow(123456, mersenne31 - 1), 1U);
    EXPECT_THROW(p.inv(0), std::domain_error);
}

TEST(SamplePrime, ReproducibleAndInRange)
{
    SeededRng a(0);
    SeededRng b(0);
    const auto pa = sample_prime(a);
    const auto pb = sample_prime(b);
    EXPECT_EQ(pa.value(), pb.value());
    EXPECT_GT(pa.value(), 1ULL << 30);
    EXPECT_LT(pa.value(), 1ULL << 31);
    EXPECT_TRUE(trial_division(pa.value()));
}

TEST(SamplePrime, DistinctSubSeedsGiveDistinctPrimes)
{
    std::set<std::uint64_t> seen;
    for (std::uint64_t k = 0; k < 50; ++k) {
        SeededRng rng(SeededRng::derive(42, k));
        seen.insert(sample_prime(rng).value());
    }
    EXPECT_EQ(seen.size(), 50U);
}

TEST(SeededRng, BelowStaysBelowBound)
{
    SeededRng rng(9);
    for (int i = 0; i < 10000; ++i) {
        ASSERT_LT(rng.below(17), 17U);
        ASSERT_LT(rng.bits(16), 1ULL << 16);
    }
    EXPECT_NE(SeededRng::derive(1, 0), SeededRng::derive(1, 1));
    EXPECT_NE(SeededRng::derive(1, 0), SeededRng::derive(2, 0));
}
