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

#include "magcrit/kernels.hpp"

#include <cstddef>

namespace magcrit::kernels {

namespace {

Block step_all(double offset, const SampledPulse& pulse) {
    Block u = Block::Identity();
    for (std::size_t k = 0; k < pulse.size(); ++k)
        u = su2_exp(pulse.dt * field_vector(offset, pulse.amps[k], pulse.phases[k],
                                            pulse.times[k])) *
            u;
    return u;
}

void step_store(double offset, const SampledPulse& pulse, std::vector<Block>& out) {
    out.resize(pulse.size() + 1);
    out[0] = Block::Identity();
    for (std::size_t k = 0; k < pulse.size(); ++k)
        out[k + 1] = su2_exp(pulse.dt * field_vector(offset, pulse.amps[k], pulse.phases[k],
                                                     pulse.times[k])) *
                     out[k];
}

} // namespace

std::vector<Block> propagate_endpoints(const std::vector<double>& offsets,
                                       const SampledPulse& pulse, Execution exec) {
    const auto n = static_cast<long>(offsets.size());
    std::vector<Block> out(offsets.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < n; ++i)
            out[static_cast<std::size_t>(i)] = step_all(offsets[static_cast<std::size_t>(i)], pulse);
    } else {
        for (long i = 0; i < n; ++i)
            out[static_cast<std::size_t>(i)] = step_all(offsets[static_cast<std::size_t>(i)], pulse);
    }
    return out;
}

std::vector<std::vector<Block>> propagate_trajectories(const std::vector<double>& offsets,
                                                       const SampledPulse& pulse, Execution exec) {
    const auto n = static_cast<long>(offsets.size());
    std::vector<std::vector<Block>> out(offsets.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < n; ++i)
            step_store(offsets[static_cast<std::size_t>(i)], pulse, out[static_cast<std::size_t>(i)]);
    } else {
        for (long i = 0; i < n; ++i)
            step_store(offsets[static_cast<std::size_t>(i)], pulse, out[static_cast<std::size_t>(i)]);
    }
    return out;
}

} // namespace magcrit::kernels
