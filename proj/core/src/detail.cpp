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

#include "detail.hpp"

namespace waring::detail {

std::vector<FieldElement> monomial_values(const MonomialBasis &basis, std::span<const FieldElement> point,
                                          const PrimeModulus &p)
{
    const unsigned d = basis.degree();
    std::vector<std::vector<FieldElement>> pw(point.size(), std::vector<FieldElement>(d + 1, 1));
    for (std::size_t i = 0; i < point.size(); ++i) {
        for (unsigned e = 1; e <= d; ++e) {
            pw[i][e] = p.mul(pw[i][e - 1], point[i]);
        }
    }
    std::vector<FieldElement> out(basis.size());
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        const auto e = basis.exponents(idx);
        FieldElement v = 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            v = p.mul(v, pw[i][e[i]]);
        }
        out[idx] = v;
    }
    return out;
}

MatrixFp evaluation_matrix(const Configuration &cfg)
{
    const auto &t = cfg.tuple;
    const auto basis = MonomialBasis::shared(t.n, t.d);
    MatrixFp m(t.s, basis->size(), cfg.prime);
    for (std::size_t i = 0; i < t.s; ++i) {
        const auto values = monomial_values(*basis, cfg.point(i), cfg.prime);
        std::copy(values.begin(), values.end(), m.row(i).begin());
    }
    return m;
}

} // namespace waring::detail
