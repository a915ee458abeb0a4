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

#ifndef WARING_JACOBIAN_HPP
#define WARING_JACOBIAN_HPP

#include <cstddef>
#include <cstdint>

#include <waring/configuration.hpp>
#include <waring/matrix.hpp>

namespace waring {

/// Jacobian of ([Q_1..Q_s], A) -> [Q_1^d .. Q_s^d] A at a configuration.
///
/// Rows: output block k (k = 0..r-1) times the degree-d monomials.
/// Columns: first s(n+1) differentiate in q_ij (column i*(n+1) + j) and hold
/// d * a_ik * Q_i^{d-1} x_j in every output block k; the last s*r
/// differentiate in a_ik (column s(n+1) + i*r + k) and hold Q_i^d in output
/// block k only.
struct MuJacobian {
    Configuration config;
    MatrixFp matrix;
};

MuJacobian build_mu_jacobian(const Configuration &cfg);

struct JacobianDimension {
    std::size_t rank = 0;
    // rank - r^2; a lower bound for dim Sigma at any data, equal to it at
    // general data.
    std::int64_t dim_sigma = 0;
    // Set when dim_sigma falls outside [0, min(N1, N2)], which no exact
    // computation can produce.
    bool flagged = false;
};

JacobianDimension dim_sigma_jacobian(const Configuration &cfg);

} // namespace waring

#endif
