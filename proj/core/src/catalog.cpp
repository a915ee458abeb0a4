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

#include <waring/catalog.hpp>

#include <algorithm>

#include <waring/sigma.hpp>

namespace waring {

const std::vector<Tuple> &deficient_quadruples()
{
    static const std::vector<Tuple> list{{2, 3, 2, 5}, {3, 2, 3, 5}, {3, 2, 5, 6}, {5, 2, 3, 8}};
    return list;
}

const std::vector<std::array<unsigned, 3>> &alexander_hirschowitz_exceptions()
{
    static const std::vector<std::array<unsigned, 3>> list{{2, 4, 5}, {3, 4, 9}, {4, 3, 7}, {4, 4, 14}};
    return list;
}

std::optional<std::int64_t> known_deficiency(const Tuple &t)
{
    const auto &quads = deficient_quadruples();
    if (std::find(quads.begin(), quads.end(), t) != quads.end()) {
        return 1;
    }
    if (t.r != 1) {
        return std::nullopt;
    }
    const auto &ah = alexander_hirschowitz_exceptions();
    if (std::find(ah.begin(), ah.end(), std::array<unsigned, 3>{t.n, t.d, t.s}) != ah.end()) {
        return 1;
    }
    if (t.d == 2 && t.s >= 2 && t.s <= t.n) {
        // Symmetric matrices of rank s: s(n+1) - s(s-1)/2 affine parameters.
        const std::int64_t n = t.n;
        const std::int64_t s = t.s;
        const std::int64_t dim = s * (n + 1) - s * (s - 1) / 2 - 1;
        const auto b = expected_bounds(t);
        return std::min(b.n1, b.n2) - dim;
    }
    return std::nullopt;
}

} // namespace waring
