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

#include <waring/field.hpp>

#include <array>
#include <limits>
#include <stdexcept>
#include <string>

namespace waring {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    while (e != 0) {
        if (e & 1U) {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1U;
    }
    return r;
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    static constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto w : witnesses) {
        if (n % w == 0) {
            return n == w;
        }
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (auto a : witnesses) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p)
{
    if (p <= lower_bound || p >= upper_bound || !is_prime(p)) {
        throw std::invalid_argument("modulus must be a prime in (2^30, 2^31), got " + std::to_string(p));
    }
    m_p = static_cast<std::uint32_t>(p);
    m_barrett = std::numeric_limits<std::uint64_t>::max() / p;
}

FieldElement PrimeModulus::pow(FieldElement base, std::uint64_t e) const
{
    FieldElement r = 1;
    while (e != 0) {
        if (e & 1U) {
            r = mul(r, base);
        }
        base = mul(base, base);
        e >>= 1U;
    }
    return r;
}

FieldElement PrimeModulus::inv(FieldElement a) const
{
    if (a == 0) {
        throw std::domain_error("inverse of zero");
    }
    return pow(a, m_p - 2);
}

std::uint64_t SeededRng::below(std::uint64_t bound)
{
    if (bound == 0) {
        throw std::invalid_argument("SeededRng::below: empty range");
    }
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const auto x = next();
        if (x < limit) {
            return x % bound;
        }
    }
}

std::uint64_t SeededRng::derive(std::uint64_t seed, std::uint64_t stream)
{
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

PrimeModulus sample_prime(SeededRng &rng)
{
    for (;;) {
        const std::uint64_t candidate = PrimeModulus::lower_bound + rng.bits(30);
        if (candidate > PrimeModulus::lower_bound && is_prime(candidate)) {
            return PrimeModulus(candidate);
        }
    }
}

} // namespace waring
