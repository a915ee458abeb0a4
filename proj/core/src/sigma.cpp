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

#include <waring/sigma.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>

#include <waring/eta.hpp>
#include <waring/jacobian.hpp>
#include <waring/matrix.hpp>

namespace waring {

Bounds expected_bounds(const Tuple &t)
{
    validate(t);
    const std::int64_t n = t.n;
    const std::int64_t r = t.r;
    const std::int64_t s = t.s;
    const auto dim = static_cast<std::int64_t>(forms_dimension(t.n, t.d));
    Bounds b;
    b.n1 = s * n + r * (s - r);
    b.n2 = r * (dim - r);
    b.expected_codim = std::max<std::int64_t>(0, b.n2 - b.n1);
    return b;
}

std::string_view to_string(Certificate c)
{
    switch (c) {
    case Certificate::non_deficiency_proved:
        return "NonDeficiencyProved";
    case Certificate::deficiency_evidence:
        return "DeficiencyEvidence";
    case Certificate::inconclusive:
        return "Inconclusive";
    }
    return "Inconclusive";
}

std::string_view to_string(Methods m)
{
    switch (m) {
    case Methods::eta:
        return "eta";
    case Methods::jacobian:
        return "jacobian";
    case Methods::both:
        return "both";
    }
    return "eta";
}

Methods parse_methods(std::string_view text)
{
    if (text == "eta") {
        return Methods::eta;
    }
    if (text == "jacobian") {
        return Methods::jacobian;
    }
    if (text == "both") {
        return Methods::both;
    }
    throw ParameterError("unknown method '" + std::string(text) + "' (expected eta, jacobian or both)");
}

namespace {

// Streams separating the independent draws of one tuple.
constexpr std::uint64_t eta_stream = 0;
constexpr std::uint64_t jacobian_stream = 1;

std::uint64_t tuple_key(const Tuple &t)
{
    return (std::uint64_t{t.n} << 48U) ^ (std::uint64_t{t.d} << 32U) ^ (std::uint64_t{t.r} << 16U) ^ t.s;
}

std::uint64_t round_seed(std::uint64_t base, const Tuple &t, std::uint64_t stream, std::uint64_t index)
{
    return SeededRng::derive(SeededRng::derive(SeededRng::derive(base, tuple_key(t)), stream), index);
}

std::array<PrimeModulus, 2> prime_pair(std::uint64_t base, const Tuple &t, std::uint64_t stream,
                                       unsigned round)
{
    SeededRng rng(round_seed(base, t, stream + 0x100, round));
    const PrimeModulus a = sample_prime(rng);
    PrimeModulus b = sample_prime(rng);
    while (b == a) {
        b = sample_prime(rng);
    }
    return {a, b};
}

RepetitionRecord run_protocol(const Tuple &t, const AnalyzeOptions &options, std::uint64_t stream,
                              const std::function<std::int64_t(const Configuration &)> &evaluate)
{
    const std::uint64_t prime_base = options.prime_seed.value_or(options.seed);
    RepetitionRecord rec;
    unsigned config_round = 0;
    unsigned prime_round = 0;
    for (;;) {
        const auto primes = prime_pair(prime_base, t, stream, prime_round);
        const std::array<std::uint64_t, 2> seeds{round_seed(options.seed, t, stream, 2 * config_round),
                                                 round_seed(options.seed, t, stream, 2 * config_round + 1)};
        rec.values.clear();
        for (auto seed : seeds) {
            const auto cfg = sample_configuration(t, seed, primes[0]);
            rec.values.push_back(evaluate(cfg));
            rec.values.push_back(evaluate(cfg.with_prime(primes[1])));
        }
        rec.primes = {primes[0].value(), primes[1].value()};
        rec.seeds = seeds;
        rec.configuration_resamples = config_round;
        rec.prime_resamples = prime_round;

        const auto &v = rec.values;
        const bool prime_disagree = v[0] != v[1] || v[2] != v[3];
        const bool config_disagree = v[0] != v[2] || v[1] != v[3];
        if (!prime_disagree && !config_disagree) {
            rec.agree = true;
            return rec;
        }
        if (prime_disagree && prime_round < max_prime_resamples) {
            ++prime_round;
        } else if (config_round < max_configuration_resamples) {
            ++config_round;
        } else if (prime_round < max_prime_resamples) {
            ++prime_round;
        } else {
            rec.agree = false;
            return rec;
        }
    }
}

} // namespace

std::array<std::uint64_t, 2> configuration_seeds(const Tuple &t, std::uint64_t seed)
{
    return {round_seed(seed, t, eta_stream, 0), round_seed(seed, t, eta_stream, 1)};
}

SigmaReport analyze(const Tuple &t, const AnalyzeOptions &options)
{
    const auto start = std::chrono::steady_clock::now();
    const Bounds bounds = expected_bounds(t);
    const std::int64_t target = std::min(bounds.n1, bounds.n2);

    SigmaReport rep;
    rep.tuple = t;
    rep.n1 = bounds.n1;
    rep.n2 = bounds.n2;
    rep.expected_codim = bounds.expected_codim;
    rep.boundary = t.s == forms_dimension(t.n, t.d);

    const bool use_eta = options.methods != Methods::jacobian;
    const bool use_jacobian = options.methods != Methods::eta;

    bool eta_proves = false;
    bool jacobian_proves = false;
    bool consistent = true;

    if (use_eta) {
        auto rec = run_protocol(t, options, eta_stream, [](const Configuration &cfg) {
            return static_cast<std::int64_t>(eta_nullity(cfg));
        });
        // Special data can only enlarge the kernel, so the smallest value is
        // the best available estimate.
        const std::int64_t nullity = *std::min_element(rec.values.begin(), rec.values.end());
        if (nullity < bounds.expected_codim) {
            throw std::logic_error("eta nullity below the semicontinuity bound for " + to_string(t));
        }
        rep.eta_nullity = nullity;
        rep.dim_sigma_eta = bounds.n2 - nullity;
        eta_proves = nullity == bounds.expected_codim;
        consistent = consistent && rec.agree;
        rep.primes = rec.primes;
        rep.seeds = rec.seeds;
        rep.eta_runs = std::move(rec);
    }
    if (use_jacobian) {
        auto rec = run_protocol(t, options, jacobian_stream, [](const Configuration &cfg) {
            const auto jd = dim_sigma_jacobian(cfg);
            if (jd.flagged) {
                throw std::logic_error("Jacobian dimension outside [0, min(N1,N2)] for " + to_string(cfg.tuple));
            }
            return jd.dim_sigma;
        });
        const std::int64_t dim = *std::max_element(rec.values.begin(), rec.values.end());
        rep.dim_sigma_jacobian = dim;
        jacobian_proves = dim == target;
        consistent = consistent && rec.agree;
        if (!use_eta) {
            rep.primes = rec.primes;
            rep.seeds = rec.seeds;
        }
        rep.jacobian_runs = std::move(rec);
    }
    if (use_eta && use_jacobian) {
        rep.method_agreement = consistent && *rep.dim_sigma_eta == *rep.dim_sigma_jacobian;
        consistent = *rep.method_agreement;
    }

    rep.dim_sigma = use_eta ? *rep.dim_sigma_eta : *rep.dim_sigma_jacobian;
    if (use_eta && use_jacobian) {
        rep.dim_sigma = std::max(*rep.dim_sigma_eta, *rep.dim_sigma_jacobian);
    }
    rep.deficiency = target - rep.dim_sigma;

    if (eta_proves || jacobian_proves) {
        rep.certificate = Certificate::non_deficiency_proved;
    } else if (consistent) {
        rep.certificate = Certificate::deficiency_evidence;
    } else {
        rep.certificate = Certificate::inconclusive;
    }

    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

GroveElement inspect_grove(const Configuration &cfg, std::vector<Form> forms)
{
    const auto &t = cfg.tuple;
    const auto &p = cfg.prime;
    if (forms.size() != t.r) {
        throw ParameterError("a grove candidate needs exactly r forms");
    }
    GroveElement g;

    MatrixFp span(t.r, forms.front().basis().size(), p);
    for (std::size_t j = 0; j < t.r; ++j) {
        std::copy(forms[j].coeffs().begin(), forms[j].coeffs().end(), span.row(j).begin());
    }
    const auto span_rank = rank(span);
    if (span_rank == 0) {
        throw PreconditionError("grove candidate is the zero tuple");
    }
    g.system_dimension = static_cast<unsigned>(span_rank - 1);
    if (g.system_dimension + 1 < t.r) {
        g.center_dimension = t.r - (g.system_dimension + 2);
    }

    g.verified = true;
    for (std::size_t i = 0; i < t.s; ++i) {
        const auto q = cfg.point(i);
        PointCheck c;
        c.base_locus = std::all_of(forms.begin(), forms.end(), [&](const Form &u) { return evaluate(u, q) == 0; });
        const Form combined = linear_combination(forms, cfg.coefficient_row(i));
        c.in_center = combined.is_zero();
        c.singular = true;
        for (unsigned k = 0; k <= t.n && c.singular; ++k) {
            c.singular = evaluate(partial(combined, k), q) == 0;
        }
        g.verified = g.verified && c.passed();
        g.checks.push_back(c);
    }
    g.forms = std::move(forms);
    return g;
}

GroveCertificate extract_groves(const Configuration &cfg)
{
    const auto sys = build_eta_system(cfg);
    const auto kernel = nullspace(sys.matrix);
    if (kernel.nullity == 0) {
        throw PreconditionError("eta has trivial kernel for " + to_string(cfg.tuple) + ": no grove");
    }
    const auto &t = cfg.tuple;
    const auto basis = MonomialBasis::shared(t.n, t.d);
    const std::size_t dim = basis->size();

    GroveCertificate cert{cfg, kernel.nullity, {}, true};
    for (const auto &v : kernel.basis) {
        std::vector<Form> forms;
        forms.reserve(t.r);
        for (std::size_t j = 0; j < t.r; ++j) {
            const auto first = v.begin() + static_cast<std::ptrdiff_t>(j * dim);
            forms.emplace_back(basis, cfg.prime, Side::differential,
                               std::vector<FieldElement>(first, first + static_cast<std::ptrdiff_t>(dim)));
        }
        auto g = inspect_grove(cfg, std::move(forms));
        cert.verified = cert.verified && g.verified;
        cert.kernel_basis.push_back(std::move(g));
    }
    return cert;
}

} // namespace waring
