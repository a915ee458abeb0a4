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

#include <waring/form.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace waring {

Form::Form(std::shared_ptr<const MonomialBasis> basis, const PrimeModulus &modulus, Side side)
    : m_basis(std::move(basis)), m_mod(modulus), m_side(side), m_coeffs(m_basis->size(), 0)
{
}

Form::Form(std::shared_ptr<const MonomialBasis> basis, const PrimeModulus &modulus, Side side,
           std::vector<FieldElement> coeffs)
    : m_basis(std::move(basis)), m_mod(modulus), m_side(side), m_coeffs(std::move(coeffs))
{
    if (m_coeffs.size() != m_basis->size()) {
        throw std::invalid_argument("Form: coefficient count does not match the monomial basis");
    }
}

bool Form::is_zero() const
{
    return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](FieldElement c) { return c == 0; });
}

Form &Form::operator+=(const Form &other)
{
    if (!(basis() == other.basis()) || m_side != other.m_side) {
        throw std::invalid_argument("Form::operator+=: incompatible forms");
    }
    for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
        m_coeffs[i] = m_mod.add(m_coeffs[i], other.m_coeffs[i]);
    }
    return *this;
}

Form Form::scaled(FieldElement c) const
{
    Form out = *this;
    for (auto &x : out.m_coeffs) {
        x = m_mod.mul(x, c);
    }
    return out;
}

LinearForm::LinearForm(std::vector<FieldElement> coords) : m_coords(std::move(coords))
{
    if (m_coords.empty() || std::all_of(m_coords.begin(), m_coords.end(), [](FieldElement c) { return c == 0; })) {
        throw std::invalid_argument("LinearForm: zero form");
    }
}

FieldElement factorial(unsigned k, const PrimeModulus &modulus)
{
    FieldElement r = 1;
    for (unsigned i = 2; i <= k; ++i) {
        r = modulus.mul(r, i);
    }
    return r;
}

namespace {

// Powers x^0..x^d of every coordinate, row per coordinate.
std::vector<std::vector<FieldElement>> power_table(std::span<const FieldElement> point, unsigned d,
                                                   const PrimeModulus &p)
{
    std::vector<std::vector<FieldElement>> table(point.size(), std::vector<FieldElement>(d + 1, 1));
    for (std::size_t i = 0; i < point.size(); ++i) {
        for (unsigned e = 1; e <= d; ++e) {
            table[i][e] = p.mul(table[i][e - 1], point[i]);
        }
    }
    return table;
}

} // namespace

Form power(const LinearForm &q, unsigned d, const PrimeModulus &modulus)
{
    const auto basis = MonomialBasis::shared(q.n(), d);
    const auto pw = power_table(q.coords(), d, modulus);
    std::vector<FieldElement> inv_fact(d + 1);
    for (unsigned k = 0; k <= d; ++k) {
        inv_fact[k] = modulus.inv(factorial(k, modulus));
    }
    const FieldElement dfact = factorial(d, modulus);

    Form out(basis, modulus, Side::polynomial);
    for (std::size_t idx = 0; idx < basis->size(); ++idx) {
        const auto e = basis->exponents(idx);
        FieldElement c = dfact;
        for (std::size_t i = 0; i < e.size(); ++i) {
            c = modulus.mul(c, inv_fact[e[i]]);
            c = modulus.mul(c, pw[i][e[i]]);
        }
        out.set_coeff(idx, c);
    }
    return out;
}

Form multiply_by_variable(const Form &f, unsigned k)
{
    if (k > f.n()) {
        throw std::invalid_argument("multiply_by_variable: variable index out of range");
    }
    const auto basis = MonomialBasis::shared(f.n(), f.degree() + 1);
    Form out(basis, f.modulus(), f.side());
    std::vector<MonomialBasis::exponent_type> e(f.basis().variables());
    for (std::size_t idx = 0; idx < f.basis().size(); ++idx) {
        if (f.coeff(idx) == 0) {
            continue;
        }
        const auto src = f.basis().exponents(idx);
        std::copy(src.begin(), src.end(), e.begin());
        ++e[k];
        out.set_coeff(basis->rank(e), f.coeff(idx));
    }
    return out;
}

Form apolar_apply(const Form &u, const Form &f)
{
    if (u.side() != Side::differential || f.side() != Side::polynomial) {
        throw std::invalid_argument("apolar_apply: expects an operator acting on a polynomial");
    }
    if (u.n() != f.n()) {
        throw std::invalid_argument("apolar_apply: different numbers of variables");
    }
    if (u.degree() > f.degree()) {
        throw std::invalid_argument("apolar_apply: operator degree exceeds form degree");
    }
    const auto &p = f.modulus();
    const auto out_basis = MonomialBasis::shared(f.n(), f.degree() - u.degree());
    Form out(out_basis, p, Side::polynomial);
    std::vector<MonomialBasis::exponent_type> diff(f.basis().variables());

    for (std::size_t j = 0; j < u.basis().size(); ++j) {
        if (u.coeff(j) == 0) {
            continue;
        }
        const auto J = u.basis().exponents(j);
        for (std::size_t i = 0; i < f.basis().size(); ++i) {
            if (f.coeff(i) == 0) {
                continue;
            }
            const auto I = f.basis().exponents(i);
            bool divides = true;
            FieldElement c = p.mul(u.coeff(j), f.coeff(i));
            for (std::size_t v = 0; v < I.size() && divides; ++v) {
                if (J[v] > I[v]) {
                    divides = false;
                    break;
                }
                // I_v! / (I_v - J_v)!
                for (unsigned t = I[v]; t > static_cast<unsigned>(I[v] - J[v]); --t) {
                    c = p.mul(c, t);
                }
                diff[v] = static_cast<MonomialBasis::exponent_type>(I[v] - J[v]);
            }
            if (!divides) {
                continue;
            }
            const auto at = out_basis->rank(diff);
            out.set_coeff(at, p.add(out.coeff(at), c));
        }
    }
    return out;
}

FieldElement evaluate(const Form &f, std::span<const FieldElement> point)
{
    if (point.size() != f.basis().variables()) {
        throw std::invalid_argument("evaluate: coordinate count does not match the form");
    }
    const auto &p = f.modulus();
    const auto pw = power_table(point, f.degree(), p);
    FieldElement acc = 0;
    for (std::size_t idx = 0; idx < f.basis().size(); ++idx) {
        if (f.coeff(idx) == 0) {
            continue;
        }
        FieldElement m = f.coeff(idx);
        const auto e = f.basis().exponents(idx);
        for (std::size_t i = 0; i < e.size(); ++i) {
            m = p.mul(m, pw[i][e[i]]);
        }
        acc = p.add(acc, m);
    }
    return acc;
}

Form partial(const Form &f, unsigned k)
{
    if (f.degree() == 0) {
        throw std::invalid_argument("partial: form of degree 0");
    }
    if (k > f.n()) {
        throw std::invalid_argument("partial: variable index out of range");
    }
    const auto &p = f.modulus();
    const auto basis = MonomialBasis::shared(f.n(), f.degree() - 1);
    Form out(basis, p, f.side());
    std::vector<MonomialBasis::exponent_type> e(f.basis().variables());
    for (std::size_t idx = 0; idx < f.basis().size(); ++idx) {
        const auto src = f.basis().exponents(idx);
        if (f.coeff(idx) == 0 || src[k] == 0) {
            continue;
        }
        std::copy(src.begin(), src.end(), e.begin());
        --e[k];
        out.set_coeff(basis->rank(e), p.mul(f.coeff(idx), src[k]));
    }
    return out;
}

Form linear_combination(std::span<const Form> forms, std::span<const FieldElement> weights)
{
    if (forms.empty() || forms.size() != weights.size()) {
        throw std::invalid_argument("linear_combination: need one weight per form");
    }
    Form out(forms.front().basis_ptr(), forms.front().modulus(), forms.front().side());
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (weights[i] != 0) {
            out += forms[i].scaled(weights[i]);
        }
    }
    return out;
}

} // namespace waring
