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

#ifndef WARING_FIELD_HPP
#define WARING_FIELD_HPP

#include <cstdint>
#include <random>

namespace waring {

/// Residue in [0, p) for the modulus of the surrounding computation.
using FieldElement = std::uint32_t;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// An odd prime in (2^30, 2^31) together with a Barrett constant for fast
/// reduction of 64-bit products.
class PrimeModulus {
public:
    static constexpr std::uint64_t lower_bound = std::uint64_t{1} << 30;
    static constexpr std::uint64_t upper_bound = std::uint64_t{1} << 31;

    /// Throws std::invalid_argument unless p is a prime in (2^30, 2^31).
    explicit PrimeModulus(std::uint64_t p);

    std::uint32_t value() const { return m_p; }

    /// x mod p for any 64-bit x.
    FieldElement reduce(std::uint64_t x) const
    {
        const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m_barrett) >> 64);
        std::uint64_t r = x - q * m_p;
        while (r >= m_p) {
            r -= m_p;
        }
        return static_cast<FieldElement>(r);
    }

    FieldElement from_int(std::int64_t v) const
    {
        const auto m = static_cast<std::int64_t>(m_p);
        auto r = v % m;
        if (r < 0) {
            r += m;
        }
        return static_cast<FieldElement>(r);
    }
    FieldElement from_uint(std::uint64_t v) const { return static_cast<FieldElement>(v % m_p); }

    FieldElement add(FieldElement a, FieldElement b) const
    {
        const std::uint32_t s = a + b;
        return s >= m_p ? s - m_p : s;
    }
    FieldElement sub(FieldElement a, FieldElement b) const { return a >= b ? a - b : a + (m_p - b); }
    FieldElement neg(FieldElement a) const { return a == 0 ? 0 : m_p - a; }
    FieldElement mul(FieldElement a, FieldElement b) const
    {
        return reduce(static_cast<std::uint64_t>(a) * b);
    }
    /// a + b*c
    FieldElement mul_add(FieldElement a, FieldElement b, FieldElement c) const
    {
        return reduce(a + static_cast<std::uint64_t>(b) * c);
    }
    FieldElement pow(FieldElement base, std::uint64_t e) const;
    /// Throws std::domain_error on zero.
    FieldElement inv(FieldElement a) const;

    friend bool operator==(const PrimeModulus &a, const PrimeModulus &b) { return a.m_p == b.m_p; }

private:
    std::uint32_t m_p;
    std::uint64_t m_barrett;
};

/// Seeded 64-bit generator. Every draw is a fixed function of the seed, so
/// results are reproducible across platforms (no std distributions involved).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : m_engine(seed) {}

    std::uint64_t next() { return m_engine(); }
    /// Uniform in [0, 2^bits), bits <= 64.
    std::uint64_t bits(unsigned n) { return n == 0 ? 0 : next() >> (64 - n); }
    /// Uniform in [0, bound); rejection sampling, bound > 0.
    std::uint64_t below(std::uint64_t bound);

    /// Independent sub-seed for (seed, stream) pairs.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

private:
    std::mt19937_64 m_engine;
};

/// Uniformly sampled prime in (2^30, 2^31).
PrimeModulus sample_prime(SeededRng &rng);

} // namespace waring

#endif
