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

#include <waring/matrix.hpp>

#include <algorithm>
#include <stdexcept>

namespace waring {

MatrixFp::MatrixFp(std::size_t rows, std::size_t cols, const PrimeModulus &modulus)
    : m_rows(rows), m_cols(cols), m_mod(modulus), m_data(rows * cols, 0)
{
}

MatrixFp MatrixFp::identity(std::size_t n, const PrimeModulus &modulus)
{
    MatrixFp m(n, n, modulus);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

MatrixFp MatrixFp::from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                             const PrimeModulus &modulus)
{
    const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    MatrixFp m(rows.size(), cols, modulus);
    std::size_t i = 0;
    for (const auto &r : rows) {
        if (r.size() != cols) {
            throw std::invalid_argument("MatrixFp::from_rows: ragged rows");
        }
        std::size_t j = 0;
        for (auto v : r) {
            m(i, j++) = modulus.from_int(v);
        }
        ++i;
    }
    return m;
}

MatrixFp MatrixFp::transpose() const
{
    MatrixFp t(m_cols, m_rows, m_mod);
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = 0; j < m_cols; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

std::vector<FieldElement> MatrixFp::apply(std::span<const FieldElement> v) const
{
    if (v.size() != m_cols) {
        throw std::invalid_argument("MatrixFp::apply: dimension mismatch");
    }
    std::vector<FieldElement> out(m_rows, 0);
    for (std::size_t i = 0; i < m_rows; ++i) {
        FieldElement acc = 0;
        const auto r = row(i);
        for (std::size_t j = 0; j < m_cols; ++j) {
            acc = m_mod.mul_add(acc, r[j], v[j]);
        }
        out[i] = acc;
    }
    return out;
}

MatrixFp operator*(const MatrixFp &a, const MatrixFp &b)
{
    if (a.m_cols != b.m_rows || !(a.m_mod == b.m_mod)) {
        throw std::invalid_argument("MatrixFp product: incompatible operands");
    }
    const auto &p = a.m_mod;
    MatrixFp c(a.m_rows, b.m_cols, p);
    for (std::size_t i = 0; i < a.m_rows; ++i) {
        auto out = c.row(i);
        for (std::size_t k = 0; k < a.m_cols; ++k) {
            const FieldElement f = a(i, k);
            if (f == 0) {
                continue;
            }
            const auto brow = b.row(k);
            for (std::size_t j = 0; j < b.m_cols; ++j) {
                out[j] = p.mul_add(out[j], f, brow[j]);
            }
        }
    }
    return c;
}

namespace {

// Gauss-Jordan on a private copy with first-nonzero pivoting. Returns the
// pivot columns; with `reduced` the pivot rows are cleared above as well.
std::vector<std::size_t> echelonize(MatrixFp &m, bool reduced)
{
    const auto &p = m.modulus();
    const std::uint64_t modulus = p.value();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) {
            ++piv;
        }
        if (piv == m.rows()) {
            continue;
        }
        if (piv != r) {
            std::swap_ranges(m.row(piv).begin(), m.row(piv).end(), m.row(r).begin());
        }
        auto prow = m.row(r);
        const FieldElement inv = p.inv(prow[c]);
        for (std::size_t j = c; j < m.cols(); ++j) {
            prow[j] = p.mul(prow[j], inv);
        }
        const std::size_t first = reduced ? 0 : r + 1;
        for (std::size_t i = first; i < m.rows(); ++i) {
            if (i == r) {
                continue;
            }
            auto target = m.row(i);
            const FieldElement f = target[c];
            if (f == 0) {
                continue;
            }
            const std::uint64_t nf = modulus - f;
            for (std::size_t j = c; j < m.cols(); ++j) {
                target[j] = p.reduce(target[j] + nf * prow[j]);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(const MatrixFp &m)
{
    MatrixFp work = m;
    return echelonize(work, false).size();
}

Nullspace nullspace(const MatrixFp &m)
{
    MatrixFp work = m;
    const auto pivots = echelonize(work, true);
    const auto &p = m.modulus();

    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) {
        is_pivot[c] = true;
    }
    Nullspace out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<FieldElement> v(m.cols(), 0);
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            v[pivots[k]] = p.neg(work(k, f));
        }
        out.basis.push_back(std::move(v));
    }
    out.nullity = out.basis.size();
    return out;
}

} // namespace waring
