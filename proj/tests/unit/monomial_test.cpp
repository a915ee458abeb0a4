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

#include <algorithm>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include <waring/monomial.hpp>

using namespace waring;

namespace {

// All exponent vectors of degree d in n+1 variables, in lex descending order.
void enumerate(unsigned vars, unsigned d, std::vector<unsigned> &cur, std::vector<std::vector<unsigned>> &out)
{
    if (cur.size() + 1 == vars) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (unsigned e = d + 1; e-- > 0;) {
        cur.push_back(e);
        enumerate(vars, d - e, cur, out);
        cur.pop_back();
    }
}

} // namespace

TEST(Binomial, SmallValuesAndPascal)
{
    EXPECT_EQ(binomial(5, 3), 10U);
    EXPECT_EQ(binomial(7, 2), 21U);
    EXPECT_EQ(binomial(3, 5), 0U);
    for (std::uint64_t n = 1; n < 60; ++n) {
        for (std::uint64_t k = 1; k < n; ++k) {
            ASSERT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
        }
    }
    EXPECT_EQ(binomial(67, 33), 14226520737620288370ULL);
    EXPECT_THROW(binomial(70, 35), std::overflow_error);
}

TEST(MonomialBasis, OrderingMatchesEnumeration)
{
    for (unsigned n = 0; n <= 4; ++n) {
        for (unsigned d = 0; d <= 5; ++d) {
            const MonomialBasis basis(n, d);
            std::vector<std::vector<unsigned>> expected;
            std::vector<unsigned> cur;
            enumerate(n + 1, d, cur, expected);
            ASSERT_EQ(basis.size(), expected.size());
            ASSERT_EQ(basis.size(), binomial(n + d, d));
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const auto e = basis.exponents(i);
                ASSERT_TRUE(std::equal(e.begin(), e.end(), expected[i].begin())) << "n=" << n << " d=" << d;
                ASSERT_EQ(basis.rank(e), i);
            }
        }
    }
}

TEST(MonomialBasis, FirstAndLast)
{
    const MonomialBasis basis(2, 3);
    EXPECT_EQ(basis.rank({3, 0, 0}), 0U);
    EXPECT_EQ(basis.rank({0, 0, 3}), basis.size() - 1);
    EXPECT_EQ(basis.variables(), 3U);
    EXPECT_EQ(basis.degree(), 3U);
}

TEST(MonomialBasis, RejectsMalformedExponents)
{
    const MonomialBasis basis(2, 3);
    EXPECT_THROW(basis.rank({1, 1}), std::invalid_argument);
    EXPECT_THROW(basis.rank({1, 1, 0}), std::invalid_argument);
}

TEST(MonomialBasis, SharedInstancesAreCached)
{
    const auto a = MonomialBasis::shared(3, 4);
    const auto b = MonomialBasis::shared(3, 4);
    EXPECT_EQ(a.get(), b.get());
    EXPECT_NE(a.get(), MonomialBasis::shared(4, 3).get());
}
