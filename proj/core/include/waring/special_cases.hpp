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

#ifndef WARING_SPECIAL_CASES_HPP
#define WARING_SPECIAL_CASES_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <waring/configuration.hpp>
#include <waring/form.hpp>
#include <waring/matrix.hpp>

namespace waring {

// --- Binary forms -----------------------------------------------------------

/// s x r 0/1 matrix assigning each of the s points to one of the r output
/// slots: with s = r*alpha + beta (0 <= beta < r), the first r - beta slots
/// receive alpha consecutive points and the last beta slots alpha + 1.
struct BalancedBlockMatrix {
    unsigned r = 0;
    unsigned s = 0;
    unsigned alpha = 0;
    unsigned beta = 0;
    IntegerMatrix entries;
};

/// Throws ParameterError unless 1 <= r <= s.
BalancedBlockMatrix balanced_matrix(unsigned r, unsigned s);

/// Global sections of O(d-alpha-s)^(r-beta) + O(d-alpha-s-1)^beta on P^1:
/// (r-beta) max(0, d-alpha-s+1) + beta max(0, d-alpha-s).
std::int64_t binary_splitting_nullity(unsigned d, unsigned r, unsigned s);

struct BinaryCheck {
    Tuple tuple;
    std::int64_t nullity = 0;
    std::int64_t splitting = 0;
    std::int64_t expected_codim = 0;

    bool passed() const { return nullity == splitting && splitting == expected_codim; }
};

/// n = 1 configuration with pairwise distinct random points and the balanced
/// matrix as A. Throws ParameterError unless r <= s <= d + 1.
Configuration binary_configuration(unsigned d, unsigned r, unsigned s, std::uint64_t seed);

/// Compares eta_nullity on binary_configuration() with the splitting formula
/// and with max(0, N2 - N1).
BinaryCheck verify_binary_theorem(unsigned d, unsigned r, unsigned s, std::uint64_t seed);

// --- Segre threefold in P^5 --------------------------------------------------

/// [a0 b0, a0 b1, a0 b2, a1 b0, a1 b1, a1 b2]: the image of (a, b) in
/// P^1 x P^2 against the coordinate matrix [[z0, z1, z2], [z3, z4, z5]].
std::array<std::uint64_t, 6> segre_embed(const std::array<std::uint64_t, 2> &a,
                                         const std::array<std::uint64_t, 3> &b);

/// The 2x2 minors G0 = z1 z5 - z2 z4, G1 = z2 z3 - z0 z5, G2 = z0 z4 - z1 z3.
std::array<Form, 3> segre_minors(const PrimeModulus &p);

/// a G0 + b G1 + c G2.
Form segre_quadric(const std::array<FieldElement, 3> &abc, const PrimeModulus &p);

/// 6x6 matrix of second partials of a quadric in six variables.
MatrixFp hessian(const Form &quadric);

struct SegrePointCheck {
    // a G0 + b G1 + c G2 with [a,b,c] = p_i is singular at Q_i.
    bool singular_at_point = false;
    std::size_t quadric_rank = 0;
    // Kernel of the quadric is the line through [a,b,c,0,0,0] and [0,0,0,a,b,c].
    bool kernel_is_line = false;
    // Every G_k vanishes at Q_i.
    bool on_segre = false;

    bool passed() const { return singular_at_point && quadric_rank == 4 && kernel_is_line && on_segre; }
};

struct SegreData {
    // Integer data: A_i in P^1 (8 x 2), p_i in P^2 (8 x 3), Q_i in P^5 (8 x 6).
    IntegerMatrix line_points;
    IntegerMatrix plane_points;
    IntegerMatrix points;
    PrimeModulus prime;
};

/// Eight random (A_i, p_i) with factor coordinates in [0, 2^8), so that
/// Q_i = segre_embed(A_i, p_i) stays in [0, 2^16).
SegreData sample_segre_data(std::uint64_t seed);

/// The (5,2,3,8) configuration with Q_i on the Segre threefold and A rows p_i.
Configuration segre_configuration(const SegreData &data);

struct SegreCheck {
    std::vector<SegrePointCheck> points;
    // The net a G0 + b G1 + c G2 read as (u_1, u_2, u_3) = (G0, G1, G2)
    // passes the direct grove checks on the Segre configuration.
    bool net_is_grove = false;

    bool passed() const;
};

SegreCheck segre_grove_check(std::uint64_t seed);

/// eta nullity of (5,2,3,8) at random data: the 72 x 63 system.
std::size_t system_72x63_nullity(std::uint64_t seed);
/// The same system with the points arranged on the Segre threefold.
std::size_t segre_system_nullity(std::uint64_t seed);

} // namespace waring

#endif
