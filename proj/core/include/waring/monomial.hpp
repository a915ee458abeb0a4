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

#ifndef WARING_MONOMIAL_HPP
#define WARING_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

namespace waring {

/// Exact binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// All exponent vectors of total degree d in n+1 variables, ordered
/// lexicographically descending on (e_0, ..., e_n). Index 0 is x_0^d and the
/// last index is x_n^d.
class MonomialBasis {
public:
    using exponent_type = std::uint16_t;

    MonomialBasis(unsigned n, unsigned d);

    /// Process-wide cache of bases; thread safe.
    static std::shared_ptr<const MonomialBasis> shared(unsigned n, unsigned d);

    unsigned n() const { return m_n; }
    unsigned variables() const { return m_n + 1; }
    unsigned degree() const { return m_d; }
    std::size_t size() const { return m_size; }

    std::span<const exponent_type> exponents(std::size_t index) const
    {
        return {m_table.data() + index * variables(), variables()};
    }

    /// Inverse of exponents(); throws std::invalid_argument for vectors of
    /// the wrong length or degree.
    std::size_t rank(std::span<const exponent_type> e) const;
    std::size_t rank(std::initializer_list<exponent_type> e) const
    {
        return rank(std::span<const exponent_type>(e.begin(), e.size()));
    }

    friend bool operator==(const MonomialBasis &a, const MonomialBasis &b)
    {
        return a.m_n == b.m_n && a.m_d == b.m_d;
    }

private:
    unsigned m_n;
    unsigned m_d;
    std::size_t m_size;
    std::vector<exponent_type> m_table;
};

} // namespace waring

#endif
