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

#include <gtest/gtest.h>

#include <waring/eta.hpp>
#include <waring/sigma.hpp>
#include <waring/special_cases.hpp>

using namespace waring;

namespace {

const PrimeModulus p31{2147483647ULL};

IntegerMatrix transpose(const IntegerMatrix &m)
{
    IntegerMatrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            t(j, i) = m(i, j);
        }
    }
    return t;
}

} // namespace

TEST(BalancedMatrix, ThreeSeven)
{
    const auto b = balanced_matrix(3, 7);
    EXPECT_EQ(b.alpha, 2U);
    EXPECT_EQ(b.beta, 1U);
    IntegerMatrix expected(3, 7);
    expected.data = {1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1};
    EXPECT_EQ(transpose(b.entries), expected);
}

TEST(BalancedMatrix, DegenerateShapes)
{
    const auto row = balanced_matrix(1, 5);
    for (std::size_t i = 0; i < 5; ++i) {
        EXPECT_EQ(row.entries(i, 0), 1U);
    }
    const auto id = balanced_matrix(4, 4);
    EXPECT_EQ(id.alpha, 1U);
    EXPECT_EQ(id.beta, 0U);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            EXPECT_EQ(id.entries(i, j), i == j ? 1U : 0U);
        }
    }
    EXPECT_THROW(balanced_matrix(3, 2), ParameterError);
}

TEST(SplittingFormula, Cases)
{
    EXPECT_EQ(binary_splitting_nullity(3, 1, 2), 0);
    for (unsigned d = 2; d <= 12; ++d) {
        for (unsigned s = 1; s <= d + 1; ++s) {
            for (unsigned r = 1; r <= s; ++r) {
                const auto b = expected_bounds({1, d, r, s});
                const auto value = binary_splitting_nullity(d, r, s);
                if (b.n2 <= b.n1) {
                    ASSERT_EQ(value, 0) << d << ' ' << r << ' ' << s;
                } else {
                    ASSERT_EQ(value, b.n2 - b.n1) << d << ' ' << r << ' ' << s;
                }
            }
        }
    }
}

TEST(BinaryTheorem, Examples)
{
    const auto a = verify_binary_theorem(3, 1, 2, 0);
    EXPECT_EQ(a.nullity, 0);
    EXPECT_TRUE(a.passed());
    const auto b = verify_binary_theorem(7, 3, 7, 0);
    EXPECT_EQ(b.nullity, binary_splitting_nullity(7, 3, 7));
    EXPECT_TRUE(b.passed());
    const auto cfg = binary_configuration(7, 3, 7, 0);
    EXPECT_EQ(cfg.coefficients, balanced_matrix(3, 7).entries);
    EXPECT_THROW(binary_configuration(3, 2, 5, 0), ParameterError);
}

TEST(BinaryTheorem, SweepWithSeveralSeeds)
{
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        for (unsigned d = 2; d <= 9; ++d) {
            for (unsigned s = 1; s <= d + 1; ++s) {
                for (unsigned r = 1; r <= s; ++r) {
                    ASSERT_TRUE(verify_binary_theorem(d, r, s, seed).passed()) << d << ' ' << r << ' ' << s;
                }
            }
        }
    }
}

TEST(Segre, EmbeddingCoordinates)
{
    EXPECT_EQ(segre_embed({1, 0}, {3, 5, 7}), (std::array<std::uint64_t, 6>{3, 5, 7, 0, 0, 0}));
    EXPECT_EQ(segre_embed({0, 1}, {3, 5, 7}), (std::array<std::uint64_t, 6>{0, 0, 0, 3, 5, 7}));
}

TEST(Segre, MinorsVanishOnTheImage)
{
    const auto minors = segre_minors(p31);
    SeededRng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::array<std::uint64_t, 2> a{rng.bits(8), rng.bits(8)};
        const std::array<std::uint64_t, 3> b{rng.bits(8), rng.bits(8), rng.bits(8)};
        const auto z = segre_embed(a, b);
        const std::vector<FieldElement> point(z.begin(), z.end());
        for (const auto &g : minors) {
            ASSERT_EQ(evaluate(g, point), 0U);
        }
    }
    // G0 = z1 z5 - z2 z4 at a point off the Segre.
    EXPECT_EQ(evaluate(minors[0], std::vector<FieldElement>{0, 2, 3, 0, 5, 7}), 14U - 15U + p31.value());
}

TEST(Segre, QuadricRankAndKernel)
{
    const auto q = segre_quadric({1, 0, 0}, p31);
    EXPECT_EQ(q, segre_minors(p31)[0]);
    const auto h = hessian(q);
    EXPECT_EQ(h, h.transpose());
    EXPECT_EQ(rank(h), 4U);
    const auto ns = nullspace(h);
    ASSERT_EQ(ns.nullity, 2U);
    EXPECT_EQ(ns.basis[0], (std::vector<FieldElement>{1, 0, 0, 0, 0, 0}));
    EXPECT_EQ(ns.basis[1], (std::vector<FieldElement>{0, 0, 0, 1, 0, 0}));

    SeededRng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const std::array<FieldElement, 3> abc{static_cast<FieldElement>(1 + rng.bits(8)),
                                              static_cast<FieldElement>(rng.bits(8)),
                                              static_cast<FieldElement>(rng.bits(8))};
        const auto hq = hessian(segre_quadric(abc, p31));
        ASSERT_EQ(rank(hq), 4U);
        const std::vector<FieldElement> v1{abc[0], abc[1], abc[2], 0, 0, 0};
        const std::vector<FieldElement> v2{0, 0, 0, abc[0], abc[1], abc[2]};
        for (const auto x : hq.apply(v1)) {
            ASSERT_EQ(x, 0U);
        }
        for (const auto x : hq.apply(v2)) {
            ASSERT_EQ(x, 0U);
        }
    }
}

TEST(Segre, GroveCheckPasses)
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto check = segre_grove_check(seed);
        EXPECT_TRUE(check.passed()) << seed;
        EXPECT_TRUE(check.net_is_grove);
        ASSERT_EQ(check.points.size(), 8U);
        for (const auto &pc : check.points) {
            EXPECT_EQ(pc.quadric_rank, 4U);
            EXPECT_TRUE(pc.on_segre);
        }
    }
}

TEST(Segre, SeventyTwoBySixtyThree)
{
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        EXPECT_EQ(system_72x63_nullity(seed), 1U);
        EXPECT_GE(segre_system_nullity(seed), 1U);
    }
    const auto data = sample_segre_data(2);
    const auto cfg = segre_configuration(data);
    EXPECT_EQ(cfg.tuple, (Tuple{5, 2, 3, 8}));
    EXPECT_EQ(build_eta_system(cfg).matrix.rows(), 72U);
}
