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

#ifndef WARING_CONFIGURATION_HPP
#define WARING_CONFIGURATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <waring/field.hpp>

namespace waring {

/// Invalid (n, d, r, s) or malformed caller input.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// r-dimensional spaces of degree-d forms in n+1 variables inside the span
/// of s d-th powers.
struct Tuple {
    unsigned n = 0;
    unsigned d = 0;
    unsigned r = 0;
    unsigned s = 0;

    friend auto operator<=>(const Tuple &, const Tuple &) = default;
};

std::string to_string(const Tuple &t);

/// dim S_d = C(n+d, d).
std::uint64_t forms_dimension(unsigned n, unsigned d);

/// Throws ParameterError unless n, d >= 1 and 1 <= r <= s <= C(n+d, d).
void validate(const Tuple &t);

/// Small dense matrix of nonnegative integers.
struct IntegerMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint64_t> data;

    IntegerMatrix() = default;
    IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    std::uint64_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    std::uint64_t &operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    bool row_is_zero(std::size_t i) const;

    friend bool operator==(const IntegerMatrix &, const IntegerMatrix &) = default;
};

/// Integer data behind one evaluation of the eta system or the Jacobian:
/// s points Q_i of P^n (rows of `points`) and the s x r matrix A whose i-th
/// row is the point p_i of P^{r-1}. Sampled coordinates lie in [0, 2^16).
struct Configuration {
    Tuple tuple;
    IntegerMatrix points;
    IntegerMatrix coefficients;
    std::uint64_t seed = 0;
    PrimeModulus prime;

    /// Q_i reduced mod `prime`.
    std::vector<FieldElement> point(std::size_t i) const;
    /// Row i of A reduced mod `prime`.
    std::vector<FieldElement> coefficient_row(std::size_t i) const;

    /// Same integers, evaluated under another prime.
    Configuration with_prime(const PrimeModulus &p) const;
};

inline constexpr unsigned sampled_coordinate_bits = 16;

/// Assembles a configuration from explicit data. Throws ParameterError on a
/// bad tuple, wrong shapes, a zero point or a zero row of A.
Configuration make_configuration(const Tuple &t, IntegerMatrix points, IntegerMatrix coefficients,
                                 const PrimeModulus &prime, std::uint64_t seed = 0);

/// Random configuration, deterministic in (t, seed, prime). Zero points,
/// zero rows and configurations whose d-th powers are dependent mod p are
/// redrawn from the same stream.
Configuration sample_configuration(const Tuple &t, std::uint64_t seed, const PrimeModulus &prime);
/// As above, with the prime drawn from the seed.
Configuration sample_configuration(const Tuple &t, std::uint64_t seed);

/// True when Q_1^d, ..., Q_s^d are linearly independent mod p, i.e. the
/// s x C(n+d,d) evaluation matrix of the degree-d monomials has rank s.
bool powers_independent(const Configuration &cfg);

} // namespace waring

#endif
