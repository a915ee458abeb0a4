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

#ifndef WARING_REGRESSION_HPP
#define WARING_REGRESSION_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace waring {

struct RegressionOutcome {
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Checks, for a random operator u of degree d and a random point Q in n+1
/// variables:
///   u o Q^d = d! u(Q)
///   u o (Q^{d-1} x_k) = (d-1)! (du/dx_k)(Q)   for every k
///   sum_k Q_k (du/dx_k)(Q) = d u(Q)
/// Returns an empty string on success, else a description of the failure.
std::string apolarity_identity_failure(unsigned n, unsigned d, std::uint64_t seed);

/// Known values (deficient tuples, r = 1 exceptions, dimension table) and
/// the property suites (apolarity identities, extended vs restricted eta,
/// binary theorem, Segre construction, grove verification).
std::vector<RegressionOutcome> run_regression(std::uint64_t seed,
                                              const std::function<void(const RegressionOutcome &)> &on_result = {});

} // namespace waring

#endif
