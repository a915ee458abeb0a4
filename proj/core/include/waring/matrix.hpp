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

#ifndef WARING_MATRIX_HPP
#define WARING_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <waring/field.hpp>

namespace waring {

/// Dense row-major matrix over F_p. Entries are kept reduced.
class MatrixFp {
public:
    MatrixFp(std::size_t rows, std::size_t cols, const PrimeModulus &modulus);

    static MatrixFp identity(std::size_t n, const PrimeModulus &modulus);
    /// Integer rows reduced mod p. All rows must have equal length.
    static MatrixFp from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                              const PrimeModulus &modulus);

    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }
    const PrimeModulus &modulus() const { return m_mod; }

    FieldElement operator()(std::size_t i, std::size_t j) const { return m_data[i * m_cols + j]; }
    /// The caller keeps the assigned value below p.
    FieldElement &operator()(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }

    std::span<const FieldElement> row(std::size_t i) const { return {m_data.data() + i * m_cols, m_cols}; }
    std::span<FieldElement> row(std::size_t i) { return {m_data.data() + i * m_cols, m_cols}; }

    MatrixFp transpose() const;
    std::vector<FieldElement> apply(std::span<const FieldElement> v) const;

    friend MatrixFp operator*(const MatrixFp &a, const MatrixFp &b);
    friend bool operator==(const MatrixFp &a, const MatrixFp &b)
    {
        return a.m_rows == b.m_rows && a.m_cols == b.m_cols && a.m_mod == b.m_mod && a.m_data == b.m_data;
    }

private:
    std::size_t m_rows;
    std::size_t m_cols;
    PrimeModulus m_mod;
    std::vector<FieldElement> m_data;
};

std::size_t rank(const MatrixFp &m);

struct Nullspace {
    std::size_t nullity = 0;
    // One vector per free column, in increasing column order: the free
    // coordinate is 1, the other free coordinates are 0.
    std::vector<std::vector<FieldElement>> basis;
};

Nullspace nullspace(const MatrixFp &m);

} // namespace waring

#endif
