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

#include <waring/jacobian.hpp>

#include <algorithm>

#include <waring/form.hpp>
#include <waring/monomial.hpp>
#include <waring/sigma.hpp>

namespace waring {

MuJacobian build_mu_jacobian(const Configuration &cfg)
{
    const auto &t = cfg.tuple;
    const auto &p = cfg.prime;
    const std::size_t dim = forms_dimension(t.n, t.d);
    const std::size_t q_cols = std::size_t{t.s} * (t.n + 1);
    MuJacobian jac{cfg, MatrixFp(std::size_t{t.r} * dim, q_cols + std::size_t{t.s} * t.r, p)};
    auto &mat = jac.matrix;
    const FieldElement degree = p.from_uint(t.d);

    for (std::size_t i = 0; i < t.s; ++i) {
        const LinearForm q(cfg.point(i));
        const auto alpha = cfg.coefficient_row(i);
        const Form q_low = power(q, t.d - 1, p);
        for (unsigned j = 0; j <= t.n; ++j) {
            const Form tangent = multiply_by_variable(q_low, j);
            const std::size_t col = i * (t.n + 1) + j;
            for (std::size_t k = 0; k < t.r; ++k) {
                const FieldElement scale = p.mul(degree, alpha[k]);
                for (std::size_t m = 0; m < dim; ++m) {
                    mat(k * dim + m, col) = p.mul(scale, tangent.coeff(m));
                }
            }
        }
        const Form q_top = power(q, t.d, p);
        for (std::size_t k = 0; k < t.r; ++k) {
            const std::size_t col = q_cols + i * t.r + k;
            for (std::size_t m = 0; m < dim; ++m) {
                mat(k * dim + m, col) = q_top.coeff(m);
            }
        }
    }
    return jac;
}

JacobianDimension dim_sigma_jacobian(const Configuration &cfg)
{
    const auto jac = build_mu_jacobian(cfg);
    JacobianDimension out;
    out.rank = rank(jac.matrix);
    const std::int64_t r = cfg.tuple.r;
    out.dim_sigma = static_cast<std::int64_t>(out.rank) - r * r;
    const auto bounds = expected_bounds(cfg.tuple);
    out.flagged = out.dim_sigma < 0 || out.dim_sigma > std::min(bounds.n1, bounds.n2);
    return out;
}

} // namespace waring
