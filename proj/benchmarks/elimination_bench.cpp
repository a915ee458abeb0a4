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

#include <benchmark/benchmark.h>

#include <waring/eta.hpp>
#include <waring/jacobian.hpp>
#include <waring/matrix.hpp>
#include <waring/sigma.hpp>

namespace {

void BM_RankRandomSquare(benchmark::State &state)
{
    const auto size = static_cast<std::size_t>(state.range(0));
    const waring::PrimeModulus p(2147483647ULL);
    waring::SeededRng rng(1);
    waring::MatrixFp m(size, size, p);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            m(i, j) = static_cast<waring::FieldElement>(rng.below(p.value()));
        }
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(waring::rank(m));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RankRandomSquare)->RangeMultiplier(2)->Range(32, 512)->Complexity(benchmark::oNCubed);

void BM_EtaNullity(benchmark::State &state)
{
    const waring::Tuple t{static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)),
                          static_cast<unsigned>(state.range(2)), static_cast<unsigned>(state.range(3))};
    const auto cfg = waring::sample_configuration(t, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(waring::eta_nullity(cfg));
    }
    state.SetLabel(waring::to_string(t));
}
BENCHMARK(BM_EtaNullity)
    ->Args({2, 3, 2, 5})
    ->Args({5, 2, 3, 8})
    ->Args({4, 3, 14, 23})
    ->Args({5, 3, 9, 34})
    ->Args({2, 6, 10, 28})
    ->Unit(benchmark::kMillisecond);

void BM_JacobianRank(benchmark::State &state)
{
    const waring::Tuple t{static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)),
                          static_cast<unsigned>(state.range(2)), static_cast<unsigned>(state.range(3))};
    const auto cfg = waring::sample_configuration(t, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(waring::dim_sigma_jacobian(cfg));
    }
    state.SetLabel(waring::to_string(t));
}
BENCHMARK(BM_JacobianRank)->Args({2, 3, 2, 5})->Args({3, 3, 5, 10})->Unit(benchmark::kMillisecond);

void BM_Analyze(benchmark::State &state)
{
    const waring::Tuple t{5, 2, 3, 8};
    for (auto _ : state) {
        benchmark::DoNotOptimize(waring::analyze(t, {0, std::nullopt, waring::Methods::both}));
    }
}
BENCHMARK(BM_Analyze)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
