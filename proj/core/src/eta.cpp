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

#include <waring/eta.hpp>

#include <waring/form.hpp>
#include <waring/monomial.hpp>

#include "detail.hpp"

namespace waring {

std::size_t eta_rows(const Tuple &t)
{
    return std::size_t{t.r} * t.s + std::size_t{t.s} * (t.n + 1);
}

std::size_t eta_cols(const Tuple &t)
{
    return std::size_t{t.r} * forms_dimension(t.n, t.d);
}

EtaSystem build_eta_system(const Configuration &cfg)
{
    const auto &t = cfg.tuple;
    const auto &p = cfg.prime;
    const auto basis = MonomialBasis::shared(t.n, t.d);
    const auto lower = MonomialBasis::shared(t.n, t.d - 1);
    const std::size_t dim = basis->size();

    // lowered[m * (n+1) + k] = index of x^m / x_k in the degree d-1 basis,
    // or dim when x_k does not divide x^m.
    std::vector<std::size_t> lowered(dim * (t.n + 1), dim);
    std::vector<MonomialBasis::exponent_type> e(t.n + 1);
    for (std::size_t m = 0; m < dim; ++m) {
        const auto ex = basis->exponents(m);
        for (unsigned k = 0; k <= t.n; ++k) {
            if (ex[k] == 0) {
                continue;
            }
            std::copy(ex.begin(), ex.end(), e.begin());
            --e[k];
            lowered[m * (t.n + 1) + k] = lower->rank(e);
        }
    }

    EtaSystem sys{cfg, MatrixFp(eta_rows(t), eta_cols(t), p)};
    auto &mat = sys.matrix;
    for (std::size_t i = 0; i < t.s; ++i) {
        const auto q = cfg.point(i);
        const auto alpha = cfg.coefficient_row(i);
        const auto values = detail::monomial_values(*basis, q, p);
        for (std::size_t j = 0; j < t.r; ++j) {
            auto row = mat.row(i * t.r + j);
            std::copy(values.begin(), values.end(), row.begin() + static_cast<std::ptrdiff_t>(j * dim));
        }

        const auto lower_values = detail::monomial_values(*lower, q, p);
        for (unsigned k = 0; k <= t.n; ++k) {
            auto row = mat.row(std::size_t{t.r} * t.s + i * (t.n + 1) + k);
            for (std::size_t m = 0; m < dim; ++m) {
                const auto at = lowered[m * (t.n + 1) + k];
                if (at == dim) {
                    continue;
                }
                // d/dx_k x^m at Q_i
                const FieldElement dm = p.mul(basis->exponents(m)[k], lower_values[at]);
                for (std::size_t j = 0; j < t.r; ++j) {
                    row[j * dim + m] = p.mul(alpha[j], dm);
                }
            }
        }
    }
    return sys;
}

std::size_t eta_nullity(const Configuration &cfg)
{
    const auto sys = build_eta_system(cfg);
    return sys.matrix.cols() - rank(sys.matrix);
}

std::size_t restricted_eta_nullity(const Configuration &cfg)
{
    const auto &t = cfg.tuple;
    const auto &p = cfg.prime;
    const auto basis = MonomialBasis::shared(t.n, t.d);

    // Operators of degree d vanishing at every Q_i.
    const auto ideal = nullspace(detail::evaluation_matrix(cfg));
    std::vector<Form> generators;
    generators.reserve(ideal.nullity);
    for (const auto &v : ideal.basis) {
        generators.emplace_back(basis, p, Side::differential, v);
    }

    // contraction[i][k][b] = generator_b o (Q_i^{d-1} x_k), a scalar.
    const std::size_t width = ideal.nullity;
    MatrixFp eta(std::size_t{t.s} * (t.n + 1), std::size_t{t.r} * width, p);
    for (std::size_t i = 0; i < t.s; ++i) {
        const LinearForm q(cfg.point(i));
        const Form q_low = power(q, t.d - 1, p);
        const auto alpha = cfg.coefficient_row(i);
        for (unsigned k = 0; k <= t.n; ++k) {
            const Form target = multiply_by_variable(q_low, k);
            auto row = eta.row(i * (t.n + 1) + k);
            for (std::size_t b = 0; b < width; ++b) {
                const FieldElement c = apolar_apply(generators[b], target).coeff(0);
                for (std::size_t j = 0; j < t.r; ++j) {
                    row[j * width + b] = p.mul(alpha[j], c);
                }
            }
        }
    }
    return eta.cols() - rank(eta);
}

} // namespace waring
