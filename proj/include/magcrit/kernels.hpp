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

#pragma once

#include <cmath>
#include <vector>

#include "magcrit/pulse.hpp"
#include "magcrit/su2.hpp"

namespace magcrit {

/// Where a data-parallel kernel runs. The serial path is the reference the
/// parallel one is tested against; both produce bit-identical output.
enum class Execution { serial, parallel };

namespace kernels {

/// Interaction-frame field direction h = (cos(-w t + phi), sin(-w t + phi), 0)
/// scaled by omega_1, i.e. the spin vector of the block Hamiltonian.
inline Vec3 field_vector(double offset, double amp, double phase, double t) {
    const double a = -offset * t + phase;
    return {amp * std::cos(a), amp * std::sin(a), 0.0};
}

/// Endpoint propagator of every configuration (one effective S offset each).
std::vector<Block> propagate_endpoints(const std::vector<double>& offsets,
                                       const SampledPulse& pulse, Execution exec);

/// Propagator at every grid point t_k = k dt, k = 0..N, per configuration.
std::vector<std::vector<Block>> propagate_trajectories(const std::vector<double>& offsets,
                                                       const SampledPulse& pulse, Execution exec);

} // namespace kernels
} // namespace magcrit
