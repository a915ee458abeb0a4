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

#ifndef WARING_ETA_HPP
#define WARING_ETA_HPP

#include <cstddef>

#include <waring/configuration.hpp>
#include <waring/matrix.hpp>

namespace waring {

/// Linear system whose nullity is dim ker(eta) for a configuration (A, Q).
///
/// Unknowns are the coefficients of u_1, ..., u_r in R_d, block j holding
/// u_j (column j * C(n+d,d) + monomial index). Rows:
///  - membership, row i*r + j:          u_j(Q_i) = 0
///  - singularity, row r*s + i*(n+1)+k: sum_j a_ij (du_j/dx_k)(Q_i) = 0
/// Evaluating an operator at a point treats it as an ordinary polynomial;
/// vanishing at Q_i is apolarity to Q_i^d, and vanishing of the partials is
/// apolarity to every Q_i^{d-1} Q'.
struct EtaSystem {
    Configuration config;
    MatrixFp matrix;
};

std::size_t eta_rows(const Tuple &t);
std::size_t eta_cols(const Tuple &t);

EtaSystem build_eta_system(const Configuration &cfg);

/// Nullity of the eta system; equals codim(Sigma, G(r, S_d)) at general data
/// and bounds it from above at any data.
std::size_t eta_nullity(const Configuration &cfg);

/// The map eta assembled on its literal domain: a basis of the operators
/// vanishing at every Q_i is computed first, and the class of an operator
/// modulo forms singular at Q_i is represented by its contractions with
/// Q_i^{d-1} x_k, k = 0..n. Slower; meant as a cross-check of eta_nullity.
std::size_t restricted_eta_nullity(const Configuration &cfg);

} // namespace waring

#endif
