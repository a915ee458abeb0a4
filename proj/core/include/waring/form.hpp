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

#ifndef WARING_FORM_HPP
#define WARING_FORM_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include <waring/field.hpp>
#include <waring/monomial.hpp>

namespace waring {

/// Which ring a form lives in: polynomials in the x_i, or constant-coefficient
/// differential operators in the d/dx_i acting on them.
enum class Side { polynomial, differential };

/// Homogeneous form of fixed degree, stored densely over a MonomialBasis.
class Form {
public:
    Form(std::shared_ptr<const MonomialBasis> basis, const PrimeModulus &modulus, Side side = Side::polynomial);
    Form(std::shared_ptr<const MonomialBasis> basis, const PrimeModulus &modulus, Side side,
         std::vector<FieldElement> coeffs);

    const MonomialBasis &basis() const { return *m_basis; }
    const std::shared_ptr<const MonomialBasis> &basis_ptr() const { return m_basis; }
    const PrimeModulus &modulus() const { return m_mod; }
    Side side() const { return m_side; }
    unsigned n() const { return m_basis->n(); }
    unsigned degree() const { return m_basis->degree(); }

    std::span<const FieldElement> coeffs() const { return m_coeffs; }
    FieldElement coeff(std::size_t index) const { return m_coeffs[index]; }
    void set_coeff(std::size_t index, FieldElement value) { m_coeffs[index] = value; }

    bool is_zero() const;

    Form &operator+=(const Form &other);
    Form scaled(FieldElement c) const;

    friend bool operator==(const Form &a, const Form &b)
    {
        return a.n() == b.n() && a.degree() == b.degree() && a.m_side == b.m_side && a.m_coeffs == b.m_coeffs;
    }

private:
    std::shared_ptr<const MonomialBasis> m_basis;
    PrimeModulus m_mod;
    Side m_side;
    std::vector<FieldElement> m_coeffs;
};

/// Nonzero linear form q_0 x_0 + ... + q_n x_n.
class LinearForm {
public:
    /// Throws std::invalid_argument when every coordinate is zero.
    explicit LinearForm(std::vector<FieldElement> coords);

    unsigned n() const { return static_cast<unsigned>(m_coords.size()) - 1; }
    std::span<const FieldElement> coords() const { return m_coords; }

private:
    std::vector<FieldElement> m_coords;
};

/// q^d, with coefficient multinomial(d; I) * prod q_i^{I_i} on x^I.
Form power(const LinearForm &q, unsigned d, const PrimeModulus &modulus);

/// x_k * f, one degree higher.
Form multiply_by_variable(const Form &f, unsigned k);

/// The contraction u o f for a differential operator u of degree e and a
/// polynomial f of degree d >= e. On monomials
///   d^J o x^I = I!/(I-J)! x^(I-J)  when J <= I, and 0 otherwise.
/// Throws std::invalid_argument on side, arity or degree mismatch.
Form apolar_apply(const Form &u, const Form &f);

/// Value at a point of F_p^{n+1}, reading the form as an ordinary polynomial.
FieldElement evaluate(const Form &f, std::span<const FieldElement> point);

/// Formal partial derivative in the k-th variable; same side as f.
Form partial(const Form &f, unsigned k);

/// sum_i weights[i] * forms[i]; all forms share a basis and side.
Form linear_combination(std::span<const Form> forms, std::span<const FieldElement> weights);

/// k! mod p.
FieldElement factorial(unsigned k, const PrimeModulus &modulus);

} // namespace waring

#endif
