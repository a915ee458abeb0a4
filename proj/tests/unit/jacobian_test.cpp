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

#include <waring/form.hpp>
#include <waring/jacobian.hpp>
#include <waring/sigma.hpp>

using namespace waring;

namespace {

// mu(q, a) = (sum_i a_ik Q_i^d)_k stacked over k, from explicit powers.
std::vector<FieldElement> mu(const Tuple &t, const std::vector<std::vector<FieldElement>> &q,
                             const std::vector<std::vector<FieldElement>> &a, const PrimeModulus &p)
{
    const auto size = forms_dimension(t.n, t.d);
    std::vector<FieldElement> out(t.r * size, 0);
    for (unsigned i = 0; i < t.s; ++i) {
        const auto qd = power(LinearForm(q[i]), t.d, p);
        for (unsigned k = 0; k < t.r; ++k) {
            for (std::size_t m = 0; m < size; ++m) {
                out[k * size + m] = p.mul_add(out[k * size + m], a[i][k], qd.coeff(m));
            }
        }
    }
    return out;
}

// Coefficient of e in the polynomial e -> mu(x + e v), from values at
// e = 0..deg by Lagrange interpolation.
std::vector<FieldElement> derivative_oracle(const Tuple &t, const Configuration &cfg, std::size_t column)
{
    const auto &p = cfg.prime;
    std::vector<std::vector<FieldElement>> q(t.s);
    std::vector<std::vector<FieldElement>> a(t.s);
    for (unsigned i = 0; i < t.s; ++i) {
        q[i] = cfg.point(i);
        a[i] = cfg.coefficient_row(i);
    }
    const unsigned deg = t.d + 1;
    std::vector<std::vector<FieldElement>> values;
    for (unsigned e = 0; e <= deg; ++e) {
        auto qe = q;
        auto ae = a;
        if (column < t.s * (t.n + 1)) {
            auto &c = qe[column / (t.n + 1)][column % (t.n + 1)];
            c = p.add(c, e);
        } else {
            const auto c = column - t.s * (t.n + 1);
            ae[c / t.r][c % t.r] = p.add(ae[c / t.r][c % t.r], e);
        }
        values.push_back(mu(t, qe, ae, p));
    }
    // L_e'(0) for nodes 0..deg.
    std::vector<FieldElement> weights(deg + 1, 0);
    for (unsigned e = 0; e <= deg; ++e) {
        FieldElement denom = 1;
        for (unsigned u = 0; u <= deg; ++u) {
            if (u != e) {
                denom = p.mul(denom, p.from_int(static_cast<std::int64_t>(e) - u));
            }
        }
        FieldElement numer = 0;
        for (unsigned w = 0; w <= deg; ++w) {
            if (w == e) {
                continue;
            }
            FieldElement prod = 1;
            for (unsigned u = 0; u <= deg; ++u) {
                if (u != e && u != w) {
                    prod = p.mul(prod, p.from_int(-static_cast<std::int64_t>(u)));
                }
            }
            numer = p.add(numer, prod);
        }
        weights[e] = p.mul(numer, p.inv(denom));
    }
    std::vector<FieldElement> out(values[0].size(), 0);
    for (unsigned e = 0; e <= deg; ++e) {
        for (std::size_t m = 0; m < out.size(); ++m) {
            out[m] = p.mul_add(out[m], weights[e], values[e][m]);
        }
    }
    return out;
}

} // namespace

TEST(MuJacobian, Shape)
{
    const auto j = build_mu_jacobian(sample_configuration({2, 3, 2, 5}, 1));
    EXPECT_EQ(j.matrix.rows(), 20U);
    EXPECT_EQ(j.matrix.cols(), 25U);
}

TEST(MuJacobian, ColumnsAreDirectionalDerivatives)
{
    for (const Tuple t : {Tuple{2, 3, 2, 5}, Tuple{1, 4, 2, 3}, Tuple{3, 2, 3, 4}}) {
        const auto cfg = sample_configuration(t, 12);
        const auto j = build_mu_jacobian(cfg).matrix;
        for (std::size_t c = 0; c < j.cols(); ++c) {
            const auto expected = derivative_oracle(t, cfg, c);
            for (std::size_t m = 0; m < j.rows(); ++m) {
                ASSERT_EQ(j(m, c), expected[m]) << to_string(t) << " column " << c << " row " << m;
            }
        }
    }
}

TEST(MuJacobian, IdentityCoefficientsGivePowersInOwnBlock)
{
    const Tuple t{2, 2, 3, 3};
    const PrimeModulus p(2147483647ULL);
    IntegerMatrix points(3, 3);
    IntegerMatrix a(3, 3);
    const std::uint64_t coords[3][3] = {{1, 2, 3}, {4, 0, 7}, {2, 5, 1}};
    for (unsigned i = 0; i < 3; ++i) {
        a(i, i) = 1;
        for (unsigned k = 0; k < 3; ++k) {
            points(i, k) = coords[i][k];
        }
    }
    const auto cfg = make_configuration(t, points, a, p);
    const auto j = build_mu_jacobian(cfg).matrix;
    const std::size_t size = forms_dimension(2, 2);
    for (unsigned i = 0; i < 3; ++i) {
        const auto qd = power(LinearForm(cfg.point(i)), 2, p);
        for (unsigned k = 0; k < 3; ++k) {
            const std::size_t col = 3 * 3 + i * 3 + k;
            for (unsigned block = 0; block < 3; ++block) {
                for (std::size_t m = 0; m < size; ++m) {
                    ASSERT_EQ(j(block * size + m, col), block == k ? qd.coeff(m) : 0U);
                }
            }
        }
    }
}

TEST(DimSigmaJacobian, KnownDimensions)
{
    EXPECT_EQ(dim_sigma_jacobian(sample_configuration({2, 2, 3, 3}, 2)).dim_sigma, 6);
    EXPECT_EQ(dim_sigma_jacobian(sample_configuration({4, 2, 2, 4}, 2)).dim_sigma, 20);
    EXPECT_EQ(dim_sigma_jacobian(sample_configuration({3, 3, 1, 5}, 2)).dim_sigma, 19);
    EXPECT_FALSE(dim_sigma_jacobian(sample_configuration({3, 3, 1, 5}, 2)).flagged);
}
