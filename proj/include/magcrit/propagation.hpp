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

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "magcrit/kernels.hpp"
#include "magcrit/pulse.hpp"
#include "magcrit/spin_system.hpp"
#include "magcrit/su2.hpp"

namespace magcrit {

/// Interaction-frame block Hamiltonian of one I configuration:
/// omega_1 [cos(-w t + phi) S_x + sin(-w t + phi) S_y], w = effective S offset.
Block block_hamiltonian(const SpinSystem& system, const IConfiguration& config, double amp,
                        double phase, double t);

/// Time-ordered interaction-frame propagator per configuration, stored at
/// every grid point t_k = k dt.
struct BlockTrajectory {
    double duration = 0.0;
    double dt = 0.0;
    long n_steps = 0;
    int refinements = 0;         ///< number of step doublings performed
    double error_estimate = 0.0; ///< max Frobenius change of the last doubling
    std::vector<double> offsets; ///< effective S offset per configuration (rad/s)
    SampledPulse pulse;          ///< midpoint samples the blocks were built from
    std::vector<std::vector<Block>> blocks; ///< [config][k], k = 0..n_steps

    std::size_t config_count() const noexcept { return blocks.size(); }
    std::size_t point_count() const noexcept { return blocks.empty() ? 0 : blocks[0].size(); }
    double time(std::size_t k) const { return static_cast<double>(k) * dt; }
    std::vector<Block> endpoint() const;
};

struct PropagationOptions {
    long n_steps = kDefaultSteps;
    double tol = 1e-9;
    long max_steps = long{1} << 22;
    Execution exec = Execution::parallel;
};

/// Piecewise-constant midpoint slicing, refined by step doubling until the
/// endpoint blocks of N and 2N steps differ by less than tol (Frobenius).
/// Returns the 2N trajectory. Throws ConvergenceError at the step ceiling.
BlockTrajectory propagate_interaction(const SpinSystem& system, const PulseShape& shape,
                                      const PropagationOptions& options = {});

/// Single pass on a fixed grid, no refinement.
BlockTrajectory propagate_fixed(const SpinSystem& system, const PulseShape& shape, long n_steps,
                                Execution exec = Execution::parallel);

struct LabFrameBlocks {
    std::vector<Block> blocks;   ///< exp(-i(E + w S_z) t) U_I(t), I-spin phase included
    std::vector<double> i_phase; ///< E^{(i)} t per configuration (rad)
};

/// Rotating-frame propagator U(t) = exp(-i H_0 t) U_I(t), block by block.
LabFrameBlocks lab_frame_propagator(const SpinSystem& system, const BlockTrajectory& trajectory,
                                    std::size_t t_index);

/// Full-space propagator for n equivalent S spins: the product of n identical
/// single-S factors, one per configuration.
Eigen::MatrixXcd multi_s_assemble(const SpinSystem& system,
                                  const std::vector<Block>& endpoint_blocks);

struct ProfilePoint {
    double offset; ///< rad/s
    double mx;
    double my;
    double mz;
};

/// Final <S_x>, <S_y>, <S_z> in the rotating frame after the pulse, starting
/// from S_z (initial <S_z> = 1/2), averaged uniformly over I configurations.
std::vector<ProfilePoint> excitation_profile(const SpinSystem& system, const PulseShape& shape,
                                             const std::vector<double>& offsets,
                                             long n_steps = kDefaultSteps,
                                             Execution exec = Execution::parallel);

} // namespace magcrit
