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

#include <waring/monomial.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace waring {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) {
            throw std::overflow_error("binomial: result exceeds 64 bits");
        }
    }
    return static_cast<std::uint64_t>(r);
}

namespace {

void enumerate(unsigned var, unsigned remaining, std::vector<MonomialBasis::exponent_type> &current,
               std::vector<MonomialBasis::exponent_type> &out)
{
    if (var + 1 == current.size()) {
        current[var] = static_cast<MonomialBasis::exponent_type>(remaining);
        out.insert(out.end(), current.begin(), current.end());
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        current[var] = static_cast<MonomialBasis::exponent_type>(e);
        enumerate(var + 1, remaining - e, current, out);
    }
}

} // namespace

MonomialBasis::MonomialBasis(unsigned n, unsigned d)
    : m_n(n), m_d(d), m_size(static_cast<std::size_t>(binomial(n + d, d)))
{
    m_table.reserve(m_size * variables());
    std::vector<exponent_type> current(variables(), 0);
    enumerate(0, d, current, m_table);
}

std::shared_ptr<const MonomialBasis> MonomialBasis::shared(unsigned n, unsigned d)
{
    static std::mutex mutex;
    static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const MonomialBasis>> cache;
    std::lock_guard lock(mutex);
    auto &slot = cache[{n, d}];
    if (!slot) {
        slot = std::make_shared<const MonomialBasis>(n, d);
    }
    return slot;
}

std::size_t MonomialBasis::rank(std::span<const exponent_type> e) const
{
    if (e.size() != variables()) {
        throw std::invalid_argument("MonomialBasis::rank: wrong number of exponents");
    }
    if (std::accumulate(e.begin(), e.end(), 0U) != m_d) {
        throw std::invalid_argument("MonomialBasis::rank: wrong total degree");
    }
    // Count the monomials preceding e: those agreeing on a prefix and then
    // carrying a larger exponent.
    std::size_t index = 0;
    unsigned remaining = m_d;
    for (unsigned i = 0; i < m_n; ++i) {
        const unsigned tail_vars = m_n - i;
        for (unsigned a = remaining; a > e[i]; --a) {
            const unsigned rest = remaining - a;
            index += static_cast<std::size_t>(binomial(tail_vars - 1 + rest, rest));
        }
        remaining -= e[i];
    }
    return index;
}

} // namespace waring
