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

#ifndef WARING_CATALOG_HPP
#define WARING_CATALOG_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <waring/configuration.hpp>

namespace waring {

/// The deficient tuples with r > 1 known so far, each of deficiency 1.
const std::vector<Tuple> &deficient_quadruples();

/// (n, d, s) for the deficient r = 1, d >= 3 cases (Alexander-Hirschowitz),
/// each of deficiency 1.
const std::vector<std::array<unsigned, 3>> &alexander_hirschowitz_exceptions();

/// Deficiency of a tuple in the known catalog, nullopt when the tuple is not
/// known to be deficient. Besides the lists above this covers r = 1, d = 2,
/// 2 <= s <= n (sums of s squares are quadrics of rank <= s).
std::optional<std::int64_t> known_deficiency(const Tuple &t);

} // namespace waring

#endif
