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

#ifndef WARING_SRC_DETAIL_HPP
#define WARING_SRC_DETAIL_HPP

#include <span>
#include <vector>

#include <waring/configuration.hpp>
#include <waring/matrix.hpp>
#include <waring/monomial.hpp>

namespace waring::detail {

// Values of every monomial of `basis` at `point`, in basis order.
std::vector<FieldElement> monomial_values(const MonomialBasis &basis, std::span<const FieldElement> point,
                                          const PrimeModulus &p);

// s x C(n+d,d) matrix whose i-th row lists the degree-d monomials at Q_i.
MatrixFp evaluation_matrix(const Configuration &cfg);

} // namespace waring::detail

#endif
