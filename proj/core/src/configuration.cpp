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

#include <waring/configuration.hpp>

#include <algorithm>

#include <waring/matrix.hpp>
#include <waring/monomial.hpp>

#include "detail.hpp"

namespace waring {

std::string to_string(const Tuple &t)
{
    return "(" + std::to_string(t.n) + "," + std::to_string(t.d) + "," + std::to_string(t.r) + ","
           + std::to_string(t.s) + ")";
}

std::uint64_t forms_dimension(unsigned n, unsigned d)
{
    return binomial(std::uint64_t{n} + d, d);
}

void validate(const Tuple &t)
{
    if (t.n < 1 || t.d < 1) {
        throw ParameterError("n and d must be positive in " + to_string(t));
    }
    if (t.r < 1 || t.r > t.s) {
        throw ParameterError("need 1 <= r <= s in " + to_string(t));
    }
    const auto dim = forms_dimension(t.n, t.d);
    if (t.s > dim) {
        throw ParameterError("s = " + std::to_string(t.s) + " exceeds C(n+d,d) = " + std::to_string(dim) + " in "
                             + to_string(t));
    }
}

bool IntegerMatrix::row_is_zero(std::size_t i) const
{
    const auto first = data.begin() + static_cast<std::ptrdiff_t>(i * cols);
    return std::all_of(first, first + static_cast<std::ptrdiff_t>(cols), [](std::uint64_t v) { return v == 0; });
}

std::vector<FieldElement> Configuration::point(std::size_t i) const
{
    std::vector<FieldElement> out(points.cols);
    for (std::size_t j = 0; j < points.cols; ++j) {
        out[j] = prime.from_uint(points(i, j));
    }
    return out;
}

std::vector<FieldElement> Configuration::coefficient_row(std::size_t i) const
{
    std::vector<FieldElement> out(coefficients.cols);
    for (std::size_t j = 0; j < coefficients.cols; ++j) {
        out[j] = prime.from_uint(coefficients(i, j));
    }
    return out;
}

Configuration Configuration::with_prime(const PrimeModulus &p) const
{
    Configuration out = *this;
    out.prime = p;
    return out;
}

Configuration make_configuration(const Tuple &t, IntegerMatrix points, IntegerMatrix coefficients,
                                 const PrimeModulus &prime, std::uint64_t seed)
{
    validate(t);
    if (points.rows != t.s || points.cols != t.n + 1) {
        throw ParameterError("points must be an s x (n+1) matrix");
    }
    if (coefficients.rows != t.s || coefficients.cols != t.r) {
        throw ParameterError("coefficient matrix must be s x r");
    }
    for (std::size_t i = 0; i < t.s; ++i) {
        if (points.row_is_zero(i)) {
            throw ParameterError("point " + std::to_string(i) + " is zero");
        }
        if (coefficients.row_is_zero(i)) {
            throw ParameterError("row " + std::to_string(i) + " of the coefficient matrix is zero");
        }
    }
    return Configuration{t, std::move(points), std::move(coefficients), seed, prime};
}

bool powers_independent(const Configuration &cfg)
{
    return rank(detail::evaluation_matrix(cfg)) == cfg.tuple.s;
}

Configuration sample_configuration(const Tuple &t, std::uint64_t seed, const PrimeModulus &prime)
{
    validate(t);
    SeededRng rng(seed);
    IntegerMatrix points(t.s, t.n + 1);
    IntegerMatrix coefficients(t.s, t.r);
    for (;;) {
        for (std::size_t i = 0; i < t.s; ++i) {
            do {
                for (std::size_t j = 0; j <= t.n; ++j) {
                    points(i, j) = rng.bits(sampled_coordinate_bits);
                }
            } while (points.row_is_zero(i));
            do {
                for (std::size_t j = 0; j < t.r; ++j) {
                    coefficients(i, j) = rng.bits(sampled_coordinate_bits);
                }
            } while (coefficients.row_is_zero(i));
        }
        Configuration cfg{t, points, coefficients, seed, prime};
        if (powers_independent(cfg)) {
            return cfg;
        }
    }
}

Configuration sample_configuration(const Tuple &t, std::uint64_t seed)
{
    SeededRng prime_rng(SeededRng::derive(seed, 0x7072696d65ULL));
    return sample_configuration(t, seed, sample_prime(prime_rng));
}

} // namespace waring
