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

#include "magcrit/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "magcrit/errors.hpp"

namespace magcrit {

Block block_hamiltonian(const SpinSystem& system, const IConfiguration& config, double amp,
                        double phase, double t) {
    return spin_dot(kernels::field_vector(effective_s_offset(system, config), amp, phase, t));
}

std::vector<Block> BlockTrajectory::endpoint() const {
    std::vector<Block> out;
    out.reserve(blocks.size());
    for (const auto& b : blocks)
        out.push_back(b.back());
    return out;
}

namespace {

double max_block_change(const std::vector<Block>& a, const std::vector<Block>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, (a[i] - b[i]).norm());
    return m;
}

} // namespace

BlockTrajectory propagate_fixed(const SpinSystem& system, const PulseShape& shape, long n_steps,
                                Execution exec) {
    if (n_steps < 1)
        throw InputError("n_steps must be >= 1");
    BlockTrajectory tr;
    tr.duration = shape.duration();
    tr.n_steps = n_steps;
    tr.pulse = sample(shape, n_steps);
    tr.dt = tr.pulse.dt;
    tr.offsets = effective_s_offsets(system).values();
    tr.blocks = kernels::propagate_trajectories(tr.offsets, tr.pulse, exec);
    return tr;
}

BlockTrajectory propagate_interaction(const SpinSystem& system, const PulseShape& shape,
                                      const PropagationOptions& options) {
    if (options.n_steps < 1)
        throw InputError("n_steps must be >= 1");
    if (!(options.tol > 0.0))
        throw InputError("tol must be positive");

    const auto offsets = effective_s_offsets(system).values();
    long n = options.n_steps;
    auto coarse = kernels::propagate_endpoints(offsets, sample(shape, n), options.exec);
    int refinements = 0;
    double estimate = 0.0;
    for (;;) {
        if (2 * n > options.max_steps)
            throw ConvergenceError("propagation did not reach tol " + std::to_string(options.tol) +
                                       " within " + std::to_string(options.max_steps) +
                                       " steps (best estimate " + std::to_string(estimate) + ")",
                                   estimate, n);
        auto fine = kernels::propagate_endpoints(offsets, sample(shape, 2 * n), options.exec);
        estimate = max_block_change(coarse, fine);
        ++refinements;
        n *= 2;
        if (estimate < options.tol)
            break;
        coarse = std::move(fine);
    }

    auto tr = propagate_fixed(system, shape, n, options.exec);
    tr.refinements = refinements;
    tr.error_estimate = estimate;
    return tr;
}

LabFrameBlocks lab_frame_propagator(const SpinSystem& system, const BlockTrajectory& trajectory,
                                    std::size_t t_index) {
    if (t_index >= trajectory.point_count())
        throw InputError("trajectory index out of range");
    const double t = trajectory.time(t_index);
    const auto energies = i_spin_energies(system);
    if (energies.size() != trajectory.config_count())
        throw InputError("trajectory does not belong to this spin system");

    LabFrameBlocks out;
    for (std::size_t i = 0; i < trajectory.config_count(); ++i) {
        const double w = trajectory.offsets[i];
        const double e = energies[i] * t;
        const auto up = std::polar(1.0, -(e + w * t / 2));
        const auto down = std::polar(1.0, -(e - w * t / 2));
        Block b = trajectory.blocks[i][t_index];
        b.row(0) *= up;
        b.row(1) *= down;
        out.blocks.push_back(b);
        out.i_phase.push_back(e);
    }
    return out;
}

Eigen::MatrixXcd multi_s_assemble(const SpinSystem& system,
                                  const std::vector<Block>& endpoint_blocks) {
    return assemble_full_matrix(system, endpoint_blocks);
}

std::vector<ProfilePoint> excitation_profile(const SpinSystem& system, const PulseShape& shape,
                                             const std::vector<double>& offsets, long n_steps,
                                             Execution exec) {
    for (double o : offsets)
        if (!std::isfinite(o))
            throw InputError("profile offsets must be finite");
    const auto pulse = sample(shape, n_steps);
    const double T = shape.duration();
    const Block sx = spin_x(), sy = spin_y(), sz = spin_z();

    auto point = [&](double offset) {
        const auto shifted = system.with_s_offset(offset);
        const auto cfg_offsets = effective_s_offsets(shifted).values();
        const auto ends = kernels::propagate_endpoints(cfg_offsets, pulse, Execution::serial);
        ProfilePoint p{offset, 0.0, 0.0, 0.0};
        for (std::size_t i = 0; i < ends.size(); ++i) {
            // The I-spin phase cancels in U rho U^dagger; only the S_z part matters.
            Block u = ends[i];
            const double w = cfg_offsets[i];
            u.row(0) *= std::polar(1.0, -w * T / 2);
            u.row(1) *= std::polar(1.0, w * T / 2);
            const Block rho = u * sz * u.adjoint();
            p.mx += (rho * sx).trace().real();
            p.my += (rho * sy).trace().real();
            p.mz += (rho * sz).trace().real();
        }
        const auto n = static_cast<double>(ends.size());
        p.mx /= n;
        p.my /= n;
        p.mz /= n;
        return p;
    };

    std::vector<ProfilePoint> out(offsets.size());
    const auto count = static_cast<long>(offsets.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long k = 0; k < count; ++k)
            out[static_cast<std::size_t>(k)] = point(offsets[static_cast<std::size_t>(k)]);
    } else {
        for (long k = 0; k < count; ++k)
            out[static_cast<std::size_t>(k)] = point(offsets[static_cast<std::size_t>(k)]);
    }
    return out;
}

} // namespace magcrit
