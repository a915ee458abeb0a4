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

#include <waring/regression.hpp>

#include <optional>

#include <waring/catalog.hpp>
#include <waring/eta.hpp>
#include <waring/form.hpp>
#include <waring/sigma.hpp>
#include <waring/special_cases.hpp>

namespace waring {

std::string apolarity_identity_failure(unsigned n, unsigned d, std::uint64_t seed)
{
    SeededRng rng(seed);
    const PrimeModulus p = sample_prime(rng);
    const auto basis = MonomialBasis::shared(n, d);

    std::vector<FieldElement> coeffs(basis->size());
    for (auto &c : coeffs) {
        c = static_cast<FieldElement>(rng.below(p.value()));
    }
    const Form u(basis, p, Side::differential, coeffs);
    std::vector<FieldElement> q(n + 1);
    do {
        for (auto &c : q) {
            c = static_cast<FieldElement>(rng.below(p.value()));
        }
    } while (std::all_of(q.begin(), q.end(), [](FieldElement c) { return c == 0; }));
    const LinearForm Q(q);

    const FieldElement uq = evaluate(u, q);
    if (apolar_apply(u, power(Q, d, p)).coeff(0) != p.mul(factorial(d, p), uq)) {
        return "u o Q^d != d! u(Q)";
    }
    const Form q_low = power(Q, d - 1, p);
    FieldElement euler = 0;
    for (unsigned k = 0; k <= n; ++k) {
        const FieldElement dk = evaluate(partial(u, k), q);
        const FieldElement lhs = apolar_apply(u, multiply_by_variable(q_low, k)).coeff(0);
        if (lhs != p.mul(factorial(d - 1, p), dk)) {
            return "u o (Q^{d-1} x_" + std::to_string(k) + ") != (d-1)! du/dx_k(Q)";
        }
        euler = p.mul_add(euler, q[k], dk);
    }
    if (euler != p.mul(p.from_uint(d), uq)) {
        return "Euler relation fails";
    }
    return {};
}

namespace {

struct Recorder {
    std::vector<RegressionOutcome> outcomes;
    const std::function<void(const RegressionOutcome &)> &callback;

    void add(std::string suite, std::string name, bool passed, std::string detail = {})
    {
        outcomes.push_back({std::move(suite), std::move(name), passed, std::move(detail)});
        if (callback) {
            callback(outcomes.back());
        }
    }
};

std::string summary(const SigmaReport &r)
{
    std::string s = "nullity=" + (r.eta_nullity ? std::to_string(*r.eta_nullity) : std::string("-"))
                    + " dim=" + std::to_string(r.dim_sigma) + " deficiency=" + std::to_string(r.deficiency) + " "
                    + std::string(to_string(r.certificate));
    if (r.method_agreement) {
        s += *r.method_agreement ? " methods agree" : " METHODS DISAGREE";
    }
    return s;
}

struct DimensionCase {
    Tuple tuple;
    std::int64_t dim;
};

} // namespace

std::vector<RegressionOutcome> run_regression(std::uint64_t seed,
                                              const std::function<void(const RegressionOutcome &)> &on_result)
{
    Recorder rec{{}, on_result};
    AnalyzeOptions both{seed, std::nullopt, Methods::both};

    // Deficient quadruples with r > 1.
    const std::vector<std::pair<Tuple, std::int64_t>> deficient{
        {{2, 3, 2, 5}, 1}, {{3, 2, 3, 5}, 1}, {{3, 2, 5, 6}, 3}, {{5, 2, 3, 8}, 1}};
    for (const auto &[t, nullity] : deficient) {
        const auto r = analyze(t, both);
        const bool ok = r.eta_nullity == nullity && r.deficiency == 1
                        && r.certificate == Certificate::deficiency_evidence && r.method_agreement == true;
        rec.add("deficient", to_string(t), ok, summary(r));
    }

    // r = 1 exceptions.
    for (const auto &e : alexander_hirschowitz_exceptions()) {
        const Tuple t{e[0], e[1], 1, e[2]};
        const auto r = analyze(t, both);
        const bool ok = r.eta_nullity == 1 && r.deficiency == 1 && r.certificate == Certificate::deficiency_evidence
                        && r.method_agreement == true;
        rec.add("alexander-hirschowitz", to_string(t), ok, summary(r));
    }

    // Dimensions with known values.
    std::vector<DimensionCase> dims{{{2, 2, 2, 3}, 8},  {{2, 2, 4, 4}, 8},  {{2, 2, 3, 3}, 6},  {{3, 3, 1, 5}, 19},
                                    {{3, 2, 4, 6}, 24}, {{2, 3, 3, 6}, 21}, {{4, 2, 2, 4}, 20}};
    for (unsigned n = 2; n <= 6; ++n) {
        dims.push_back({{n, 2, 2, n + 1}, std::int64_t{n} * n + 3 * n - 2});
    }
    for (const auto &c : dims) {
        const auto r = analyze(c.tuple, both);
        const bool ok = r.dim_sigma == c.dim && r.dim_sigma_jacobian == c.dim && r.method_agreement == true
                        && r.certificate == Certificate::non_deficiency_proved;
        rec.add("dimensions", to_string(c.tuple) + " dim " + std::to_string(c.dim), ok, summary(r));
    }

    // Apolarity identities and the two eta assemblies.
    for (unsigned n = 1; n <= 3; ++n) {
        for (unsigned d = 1; d <= 4; ++d) {
            std::string failure;
            for (std::uint64_t k = 0; k < 5 && failure.empty(); ++k) {
                failure = apolarity_identity_failure(n, d, SeededRng::derive(seed, 1000 * n + 10 * d + k));
            }
            rec.add("apolarity", "identities n=" + std::to_string(n) + " d=" + std::to_string(d), failure.empty(),
                    failure);
        }
    }
    for (unsigned n = 1; n <= 3; ++n) {
        for (unsigned d = 1; d <= 3; ++d) {
            const auto dim = static_cast<unsigned>(forms_dimension(n, d));
            std::string mismatch;
            for (unsigned s = 1; s <= dim; ++s) {
                for (unsigned r = 1; r <= s; ++r) {
                    const Tuple t{n, d, r, s};
                    const auto cfg = sample_configuration(t, SeededRng::derive(seed, (n << 24U) ^ (d << 16U) ^ (r << 8U) ^ s));
                    const auto a = eta_nullity(cfg);
                    const auto b = restricted_eta_nullity(cfg);
                    if (a != b && mismatch.empty()) {
                        mismatch = to_string(t) + ": " + std::to_string(a) + " vs " + std::to_string(b);
                    }
                }
            }
            rec.add("apolarity", "extended vs restricted eta n=" + std::to_string(n) + " d=" + std::to_string(d),
                    mismatch.empty(), mismatch);
        }
    }

    // Binary forms.
    for (unsigned d = 2; d <= 12; ++d) {
        std::string failure;
        for (unsigned s = 1; s <= d + 1; ++s) {
            for (unsigned r = 1; r <= s; ++r) {
                const auto c = verify_binary_theorem(d, r, s, SeededRng::derive(seed, (d << 16U) ^ (r << 8U) ^ s));
                if (!c.passed() && failure.empty()) {
                    failure = to_string(c.tuple) + ": nullity " + std::to_string(c.nullity) + ", splitting "
                              + std::to_string(c.splitting) + ", expected " + std::to_string(c.expected_codim);
                }
            }
        }
        rec.add("binary", "d=" + std::to_string(d), failure.empty(), failure);
    }

    // Segre construction and the 72 x 63 system.
    for (std::uint64_t k = 0; k < 20; ++k) {
        const auto sub = SeededRng::derive(seed, 0x5e94e + k);
        const bool grove = segre_grove_check(sub).passed();
        const auto nullity = system_72x63_nullity(sub);
        const auto arranged = segre_system_nullity(sub);
        rec.add("segre", "seed " + std::to_string(k), grove && nullity == 1 && arranged >= 1,
                "random nullity " + std::to_string(nullity) + ", Segre-arranged nullity " + std::to_string(arranged));
    }

    // Groves.
    for (const auto &[t, nullity] : deficient) {
        const auto cfg = sample_configuration(t, configuration_seeds(t, seed)[0]);
        const auto cert = extract_groves(cfg);
        rec.add("groves", to_string(t), cert.verified && cert.nullity == static_cast<std::size_t>(nullity),
                "kernel dimension " + std::to_string(cert.nullity));
    }
    for (const Tuple t : {Tuple{2, 2, 2, 3}, Tuple{2, 2, 4, 4}}) {
        const auto cfg = sample_configuration(t, configuration_seeds(t, seed)[0]);
        const auto nullity = eta_nullity(cfg);
        rec.add("groves", to_string(t) + " has none", nullity == 0, "kernel dimension " + std::to_string(nullity));
    }
    return rec.outcomes;
}

} // namespace waring
