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

#include <waring/matrix.hpp>

using namespace waring;

namespace {

const PrimeModulus p31{2147483647ULL};

MatrixFp random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed, unsigned zero_percent = 0)
{
    SeededRng rng(seed);
    MatrixFp m(rows, cols, p31);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = rng.below(100) < zero_percent ? 0 : static_cast<FieldElement>(rng.below(p31.value()));
        }
    }
    return m;
}

// Rank as the largest k with a nonzero k x k minor, minors by cofactor expansion.
FieldElement minor_det(const MatrixFp &m, const std::vector<std::size_t> &rows, const std::vector<std::size_t> &cols)
{
    if (rows.size() == 1) {
        return m(rows[0], cols[0]);
    }
    FieldElement det = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        std::vector<std::size_t> sub_cols;
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (k != c) {
                sub_cols.push_back(cols[k]);
            }
        }
        const std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
        const FieldElement term = p31.mul(m(rows[0], cols[c]), minor_det(m, sub_rows, sub_cols));
        det = c % 2 == 0 ? p31.add(det, term) : p31.sub(det, term);
    }
    return det;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t> &cur,
             std::vector<std::vector<std::size_t>> &out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

std::size_t rank_by_minors(const MatrixFp &m)
{
    for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
        std::vector<std::vector<std::size_t>> rs;
        std::vector<std::vector<std::size_t>> cs;
        std::vector<std::size_t> cur;
        subsets(m.rows(), k, 0, cur, rs);
        subsets(m.cols(), k, 0, cur, cs);
        for (const auto &r : rs) {
            for (const auto &c : cs) {
                if (minor_det(m, r, c) != 0) {
                    return k;
                }
            }
        }
    }
    return 0;
}

// Random low-rank product of an a x k and a k x b factor.
MatrixFp low_rank(std::size_t a, std::size_t b, std::size_t k, std::uint64_t seed)
{
    return random_matrix(a, k, seed) * random_matrix(k, b, seed + 1);
}

} // namespace

TEST(Rank, Identity) { EXPECT_EQ(rank(MatrixFp::identity(3, p31)), 3U); }

TEST(Rank, Zero) { EXPECT_EQ(rank(MatrixFp(4, 7, p31)), 0U); }

TEST(Rank, ProportionalRows) { EXPECT_EQ(rank(MatrixFp::from_rows({{1, 2, 3}, {2, 4, 6}}, p31)), 1U); }

TEST(Rank, EmptyShapes)
{
    EXPECT_EQ(rank(MatrixFp(0, 5, p31)), 0U);
    EXPECT_EQ(rank(MatrixFp(5, 0, p31)), 0U);
}

TEST(Rank, AgreesWithMinorsOracle)
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t rows = 1 + seed % 5;
        const std::size_t cols = 1 + (seed / 5) % 5;
        const auto dense = random_matrix(rows, cols, seed, static_cast<unsigned>(seed % 3) * 30);
        ASSERT_EQ(rank(dense), rank_by_minors(dense)) << rows << "x" << cols << " seed " << seed;
        const std::size_t k = seed % std::min(rows, cols);
        const auto thin = low_rank(rows, cols, k, seed);
        ASSERT_EQ(rank(thin), rank_by_minors(thin)) << rows << "x" << cols << " seed " << seed;
    }
}

TEST(Rank, LowRankProducts)
{
    for (std::size_t k = 0; k <= 12; ++k) {
        EXPECT_EQ(rank(low_rank(20, 15, k, 100 + k)), k);
    }
}

TEST(Rank, TransposeInvariant)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto m = low_rank(9 + seed % 4, 7 + seed % 5, seed % 7, seed);
        EXPECT_EQ(rank(m), rank(m.transpose()));
    }
}

TEST(Rank, ProductBound)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto a = low_rank(8, 6, seed % 5, seed);
        const auto b = low_rank(6, 9, (seed + 2) % 6, seed + 50);
        EXPECT_LE(rank(a * b), std::min(rank(a), rank(b)));
    }
}

TEST(Rank, Deterministic)
{
    const auto m = low_rank(30, 40, 17, 5);
    EXPECT_EQ(rank(m), rank(m));
    EXPECT_EQ(rank(m), 17U);
}

TEST(Nullspace, Identity)
{
    const auto ns = nullspace(MatrixFp::identity(3, p31));
    EXPECT_EQ(ns.nullity, 0U);
    EXPECT_TRUE(ns.basis.empty());
}

TEST(Nullspace, ZeroGivesStandardBasis)
{
    const auto ns = nullspace(MatrixFp(2, 3, p31));
    ASSERT_EQ(ns.nullity, 3U);
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<FieldElement> e(3, 0);
        e[i] = 1;
        EXPECT_EQ(ns.basis[i], e);
    }
}

TEST(Nullspace, SingleRelation)
{
    const auto ns = nullspace(MatrixFp::from_rows({{1, 1}}, p31));
    ASSERT_EQ(ns.nullity, 1U);
    // Normalized so the free coordinate is 1.
    EXPECT_EQ(ns.basis[0], (std::vector<FieldElement>{static_cast<FieldElement>(p31.value() - 1), 1}));
}

TEST(Nullspace, RankNullityAndKernelProperty)
{
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const std::size_t rows = 3 + seed % 9;
        const std::size_t cols = 4 + (seed * 7) % 11;
        const auto m = low_rank(rows, cols, seed % std::min(rows, cols), seed);
        const auto ns = nullspace(m);
        ASSERT_EQ(ns.nullity + rank(m), cols);
        ASSERT_EQ(ns.basis.size(), ns.nullity);
        for (const auto &v : ns.basis) {
            for (const auto x : m.apply(v)) {
                ASSERT_EQ(x, 0U);
            }
        }
        if (ns.nullity > 0) {
            MatrixFp basis(ns.nullity, cols, p31);
            for (std::size_t i = 0; i < ns.nullity; ++i) {
                for (std::size_t j = 0; j < cols; ++j) {
                    basis(i, j) = ns.basis[i][j];
                }
            }
            ASSERT_EQ(rank(basis), ns.nullity);
        }
    }
}

TEST(Matrix, ProductAndTranspose)
{
    const auto a = MatrixFp::from_rows({{1, 2}, {3, 4}, {5, 6}}, p31);
    const auto b = MatrixFp::from_rows({{1, 0, -1}, {2, 1, 0}}, p31);
    const auto expected = MatrixFp::from_rows({{5, 2, -1}, {11, 4, -3}, {17, 6, -5}}, p31);
    EXPECT_EQ(a * b, expected);
    EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
}
