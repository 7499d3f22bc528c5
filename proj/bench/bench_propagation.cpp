// Copyright 2026 The magcrit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial versus OpenMP propagation kernels.

#include <benchmark/benchmark.h>

#include "magcrit/kernels.hpp"
#include "magcrit/propagation.hpp"
#include "magcrit/pulse.hpp"
#include "magcrit/spin_system.hpp"
#include "magcrit/standard_cases.hpp"

namespace {

using namespace magcrit;

std::vector<double> offsets_for(int n_i) {
    std::vector<SpinSystem::ISpinHz> spins;
    for (int k = 0; k < n_i; ++k)
        spins.push_back({150.0 - 40.0 * k, 7.0 + k});
    const auto system = SpinSystem::from_hz(1, 30.0, spins, {});
    std::vector<double> offsets;
    for (const auto& c : enumerate_configurations(system))
        offsets.push_back(effective_s_offset(system, c));
    return offsets;
}

void run_endpoints(benchmark::State& state, Execution exec) {
    const auto offsets = offsets_for(static_cast<int>(state.range(0)));
    const auto pulse = sample(cases::gaussian(kPi / 2), state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::propagate_endpoints(offsets, pulse, exec));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(offsets.size()) *
                            state.range(1));
}

void BM_EndpointsSerial(benchmark::State& s) { run_endpoints(s, Execution::serial); }
void BM_EndpointsParallel(benchmark::State& s) { run_endpoints(s, Execution::parallel); }

void run_profile(benchmark::State& state, Execution exec) {
    const auto system = cases::sa();
    std::vector<double> offsets;
    for (long k = 0; k < state.range(0); ++k)
        offsets.push_back(hz_to_rad(-2000.0 + 4000.0 * k / state.range(0)));
    const auto shape = cases::gaussian(kPi / 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(excitation_profile(system, shape, offsets, 2048, exec));
}

void BM_ProfileSerial(benchmark::State& s) { run_profile(s, Execution::serial); }
void BM_ProfileParallel(benchmark::State& s) { run_profile(s, Execution::parallel); }

} // namespace

BENCHMARK(BM_EndpointsSerial)->Args({2, 4096})->Args({6, 4096})->Args({10, 4096});
BENCHMARK(BM_EndpointsParallel)->Args({2, 4096})->Args({6, 4096})->Args({10, 4096});
BENCHMARK(BM_ProfileSerial)->Arg(64)->Arg(256);
BENCHMARK(BM_ProfileParallel)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
