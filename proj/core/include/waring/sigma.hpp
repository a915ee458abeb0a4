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

#ifndef WARING_SIGMA_HPP
#define WARING_SIGMA_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <waring/configuration.hpp>
#include <waring/form.hpp>

namespace waring {

/// N1 = sn + r(s-r) parameters on the source side, N2 = r(C(n+d,d) - r) =
/// dim G(r, S_d), and the codimension max(0, N2 - N1) a non-deficient Sigma has.
struct Bounds {
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    std::int64_t expected_codim = 0;
};

/// Throws ParameterError on an invalid tuple.
Bounds expected_bounds(const Tuple &t);

enum class Certificate {
    // A sampled configuration met the semicontinuity lower bound, which
    // proves dim Sigma = min(N1, N2).
    non_deficiency_proved,
    // Every repetition exceeded the lower bound. Sampling cannot prove this.
    deficiency_evidence,
    // Repetitions kept disagreeing after the resampling budget.
    inconclusive,
};

std::string_view to_string(Certificate c);

enum class Methods { eta, jacobian, both };

std::string_view to_string(Methods m);
/// Throws ParameterError for anything but "eta", "jacobian" or "both".
Methods parse_methods(std::string_view text);

struct AnalyzeOptions {
    std::uint64_t seed = 0;
    // Defaults to `seed`.
    std::optional<std::uint64_t> prime_seed;
    Methods methods = Methods::eta;
};

/// Configuration resamples and prime resamples allowed before a tuple is
/// declared inconclusive.
inline constexpr unsigned max_configuration_resamples = 3;
inline constexpr unsigned max_prime_resamples = 2;

/// Outcome of one method under the two-configuration, two-prime protocol.
/// values are ordered (config a, prime a), (a, b), (b, a), (b, b).
struct RepetitionRecord {
    std::vector<std::int64_t> values;
    std::array<std::uint32_t, 2> primes{};
    std::array<std::uint64_t, 2> seeds{};
    bool agree = false;
    unsigned configuration_resamples = 0;
    unsigned prime_resamples = 0;
};

struct SigmaReport {
    Tuple tuple;
    std::int64_t n1 = 0;
    std::int64_t n2 = 0;
    std::int64_t expected_codim = 0;
    std::int64_t dim_sigma = 0;
    std::int64_t deficiency = 0;
    std::optional<std::int64_t> eta_nullity;
    std::optional<std::int64_t> dim_sigma_eta;
    std::optional<std::int64_t> dim_sigma_jacobian;
    // Set only when both methods ran.
    std::optional<bool> method_agreement;
    Certificate certificate = Certificate::inconclusive;
    std::array<std::uint32_t, 2> primes{};
    std::array<std::uint64_t, 2> seeds{};
    std::optional<RepetitionRecord> eta_runs;
    std::optional<RepetitionRecord> jacobian_runs;
    // s = C(n+d, d); Sigma is then all of G(r, S_d).
    bool boundary = false;
    double elapsed_ms = 0.0;
};

/// Dimension and deficiency of Sigma(n,d,r,s) under the repetition protocol.
/// Deterministic in (tuple, options). Throws ParameterError on a bad tuple.
SigmaReport analyze(const Tuple &t, const AnalyzeOptions &options = {});

/// Seeds of the two configurations used by analyze() in its first round.
std::array<std::uint64_t, 2> configuration_seeds(const Tuple &t, std::uint64_t seed);

/// Requested grove extraction from a configuration with trivial eta kernel.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Direct check of the grove conditions at one point Q_i for a tuple of
/// operators (u_1..u_r): every u_j vanishes at Q_i, and sum_j a_ij u_j either
/// vanishes identically (p_i lies in the center L) or is singular at Q_i.
struct PointCheck {
    bool base_locus = false;
    bool in_center = false;
    bool singular = false;

    bool passed() const { return base_locus && (in_center || singular); }
};

struct GroveElement {
    // u_1..u_r as operators of degree d.
    std::vector<Form> forms;
    // Projective dimension of the linear system spanned by the u_j.
    unsigned system_dimension = 0;
    // Projective dimension r - (t + 2) of the center L; empty when t = r - 1.
    std::optional<unsigned> center_dimension;
    std::vector<PointCheck> checks;
    bool verified = false;
};

struct GroveCertificate {
    Configuration config;
    std::size_t nullity = 0;
    std::vector<GroveElement> kernel_basis;
    bool verified = false;
};

/// Re-derives the grove data of a candidate r-tuple of operators through
/// evaluate() and partial() only.
GroveElement inspect_grove(const Configuration &cfg, std::vector<Form> forms);

/// Kernel of the eta system read as groves. Throws PreconditionError when
/// the kernel is zero.
GroveCertificate extract_groves(const Configuration &cfg);

} // namespace waring

#endif
