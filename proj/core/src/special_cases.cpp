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

#include <waring/special_cases.hpp>

#include <algorithm>

#include <waring/eta.hpp>
#include <waring/sigma.hpp>

namespace waring {

BalancedBlockMatrix balanced_matrix(unsigned r, unsigned s)
{
    if (r < 1 || r > s) {
        throw ParameterError("balanced_matrix needs 1 <= r <= s");
    }
    BalancedBlockMatrix m{r, s, s / r, s % r, IntegerMatrix(s, r)};
    std::size_t point = 0;
    for (unsigned slot = 0; slot < r; ++slot) {
        const unsigned width = slot < r - m.beta ? m.alpha : m.alpha + 1;
        for (unsigned w = 0; w < width; ++w) {
            m.entries(point++, slot) = 1;
        }
    }
    return m;
}

std::int64_t binary_splitting_nullity(unsigned d, unsigned r, unsigned s)
{
    if (r < 1 || r > s) {
        throw ParameterError("binary_splitting_nullity needs 1 <= r <= s");
    }
    const std::int64_t alpha = s / r;
    const std::int64_t beta = s % r;
    const std::int64_t twist = std::int64_t{d} - alpha - s;
    return (r - beta) * std::max<std::int64_t>(0, twist + 1) + beta * std::max<std::int64_t>(0, twist);
}

Configuration binary_configuration(unsigned d, unsigned r, unsigned s, std::uint64_t seed)
{
    const Tuple t{1, d, r, s};
    validate(t);
    SeededRng prime_rng(SeededRng::derive(seed, 1));
    const PrimeModulus p = sample_prime(prime_rng);

    SeededRng rng(SeededRng::derive(seed, 2));
    IntegerMatrix points(s, 2);
    for (std::size_t i = 0; i < s; ++i) {
        for (;;) {
            points(i, 0) = rng.bits(sampled_coordinate_bits);
            points(i, 1) = rng.bits(sampled_coordinate_bits);
            if (points.row_is_zero(i)) {
                continue;
            }
            // Distinct as points of P^1 over F_p.
            bool distinct = true;
            for (std::size_t j = 0; j < i && distinct; ++j) {
                const auto lhs = p.mul(p.from_uint(points(i, 0)), p.from_uint(points(j, 1)));
                const auto rhs = p.mul(p.from_uint(points(i, 1)), p.from_uint(points(j, 0)));
                distinct = lhs != rhs;
            }
            if (distinct) {
                break;
            }
        }
    }
    return make_configuration(t, std::move(points), balanced_matrix(r, s).entries, p, seed);
}

BinaryCheck verify_binary_theorem(unsigned d, unsigned r, unsigned s, std::uint64_t seed)
{
    const auto cfg = binary_configuration(d, r, s, seed);
    BinaryCheck c;
    c.tuple = cfg.tuple;
    c.nullity = static_cast<std::int64_t>(eta_nullity(cfg));
    c.splitting = binary_splitting_nullity(d, r, s);
    c.expected_codim = expected_bounds(cfg.tuple).expected_codim;
    return c;
}

std::array<std::uint64_t, 6> segre_embed(const std::array<std::uint64_t, 2> &a, const std::array<std::uint64_t, 3> &b)
{
    return {a[0] * b[0], a[0] * b[1], a[0] * b[2], a[1] * b[0], a[1] * b[1], a[1] * b[2]};
}

namespace {

// z_i z_j - z_k z_l as a quadric in six variables.
Form binomial_quadric(unsigned i, unsigned j, unsigned k, unsigned l, const PrimeModulus &p)
{
    const auto basis = MonomialBasis::shared(5, 2);
    Form f(basis, p, Side::polynomial);
    auto index = [&](unsigned a, unsigned b) {
        std::array<MonomialBasis::exponent_type, 6> e{};
        ++e[a];
        ++e[b];
        return basis->rank(e);
    };
    f.set_coeff(index(i, j), 1);
    f.set_coeff(index(k, l), p.neg(1));
    return f;
}

} // namespace

std::array<Form, 3> segre_minors(const PrimeModulus &p)
{
    return {binomial_quadric(1, 5, 2, 4, p), binomial_quadric(2, 3, 0, 5, p), binomial_quadric(0, 4, 1, 3, p)};
}

Form segre_quadric(const std::array<FieldElement, 3> &abc, const PrimeModulus &p)
{
    const auto g = segre_minors(p);
    return linear_combination(g, abc);
}

MatrixFp hessian(const Form &quadric)
{
    if (quadric.degree() != 2) {
        throw ParameterError("hessian expects a quadric");
    }
    const unsigned vars = quadric.basis().variables();
    MatrixFp h(vars, vars, quadric.modulus());
    for (unsigned i = 0; i < vars; ++i) {
        const Form di = partial(quadric, i);
        for (unsigned j = 0; j < vars; ++j) {
            h(i, j) = partial(di, j).coeff(0);
        }
    }
    return h;
}

SegreData sample_segre_data(std::uint64_t seed)
{
    SeededRng prime_rng(SeededRng::derive(seed, 3));
    SegreData data{IntegerMatrix(8, 2), IntegerMatrix(8, 3), IntegerMatrix(8, 6), sample_prime(prime_rng)};
    SeededRng rng(SeededRng::derive(seed, 4));
    constexpr unsigned factor_bits = sampled_coordinate_bits / 2;
    for (std::size_t i = 0; i < 8; ++i) {
        do {
            data.line_points(i, 0) = rng.bits(factor_bits);
            data.line_points(i, 1) = rng.bits(factor_bits);
        } while (data.line_points.row_is_zero(i));
        do {
            for (std::size_t k = 0; k < 3; ++k) {
                data.plane_points(i, k) = rng.bits(factor_bits);
            }
        } while (data.plane_points.row_is_zero(i));
        const auto q = segre_embed({data.line_points(i, 0), data.line_points(i, 1)},
                                   {data.plane_points(i, 0), data.plane_points(i, 1), data.plane_points(i, 2)});
        std::copy(q.begin(), q.end(), data.points.data.begin() + static_cast<std::ptrdiff_t>(i * 6));
    }
    return data;
}

Configuration segre_configuration(const SegreData &data)
{
    return make_configuration(Tuple{5, 2, 3, 8}, data.points, data.plane_points, data.prime);
}

bool SegreCheck::passed() const
{
    return net_is_grove && !points.empty()
           && std::all_of(points.begin(), points.end(), [](const SegrePointCheck &c) { return c.passed(); });
}

SegreCheck segre_grove_check(std::uint64_t seed)
{
    const auto data = sample_segre_data(seed);
    const auto &p = data.prime;
    const auto cfg = segre_configuration(data);
    const auto minors = segre_minors(p);

    SegreCheck out;
    for (std::size_t i = 0; i < 8; ++i) {
        const auto q = cfg.point(i);
        const auto abc_vec = cfg.coefficient_row(i);
        const std::array<FieldElement, 3> abc{abc_vec[0], abc_vec[1], abc_vec[2]};
        const Form quadric = segre_quadric(abc, p);

        SegrePointCheck c;
        c.on_segre = std::all_of(minors.begin(), minors.end(), [&](const Form &g) { return evaluate(g, q) == 0; });
        c.singular_at_point = true;
        for (unsigned k = 0; k < 6; ++k) {
            c.singular_at_point = c.singular_at_point && evaluate(partial(quadric, k), q) == 0;
        }
        const MatrixFp h = hessian(quadric);
        c.quadric_rank = rank(h);
        const std::vector<FieldElement> top{abc[0], abc[1], abc[2], 0, 0, 0};
        const std::vector<FieldElement> bottom{0, 0, 0, abc[0], abc[1], abc[2]};
        auto is_zero = [](const std::vector<FieldElement> &v) {
            return std::all_of(v.begin(), v.end(), [](FieldElement x) { return x == 0; });
        };
        c.kernel_is_line = h.cols() - c.quadric_rank == 2 && is_zero(h.apply(top)) && is_zero(h.apply(bottom));
        out.points.push_back(c);
    }

    std::vector<Form> net;
    for (const auto &g : minors) {
        net.emplace_back(g.basis_ptr(), p, Side::differential, std::vector<FieldElement>(g.coeffs().begin(), g.coeffs().end()));
    }
    const auto grove = inspect_grove(cfg, std::move(net));
    out.net_is_grove = grove.verified && grove.system_dimension == 2 && !grove.center_dimension;
    return out;
}

std::size_t system_72x63_nullity(std::uint64_t seed)
{
    return eta_nullity(sample_configuration(Tuple{5, 2, 3, 8}, seed));
}

std::size_t segre_system_nullity(std::uint64_t seed)
{
    return eta_nullity(segre_configuration(sample_segre_data(seed)));
}

} // namespace waring
