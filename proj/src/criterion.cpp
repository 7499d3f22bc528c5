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

#include <algorithm>
#include <cmath>
#include <limits>

#include "magcrit/magnus.hpp"

namespace magcrit {

CriterionReport explicit_criterion(const SpinSystem& system, const PulseShape& shape,
                                   const CriterionOptions& options) {
    CriterionReport r;
    r.pulse = shape.name();
    r.I_T = abs_amplitude_integral(shape, shape.duration(), options.n_steps);
    r.theta_T = flip_angle(shape, shape.duration(), options.n_steps);
    r.criterion23_met = r.I_T < kTwoPi;
    r.criterion25_met = std::abs(r.theta_T) < kTwoPi;

    PropagationOptions popt;
    popt.n_steps = options.n_steps;
    popt.tol = options.tol;
    popt.exec = options.exec;
    const auto trajectory = propagate_interaction(system, shape, popt);
    const auto solution = extract_omega(trajectory, options.exec);
    r.n_steps = trajectory.n_steps;
    r.propagation_error = trajectory.error_estimate;

    const auto running_abs = cumulative_abs(trajectory.pulse);
    r.magnus_gap_nearest = std::numeric_limits<double>::infinity();
    r.bound21_margin = std::numeric_limits<double>::infinity();
    r.bound22_margin = std::numeric_limits<double>::infinity();

    for (std::size_t k = 0; k < solution.point_count(); ++k) {
        const bool flagged = solution.ambiguous_at(k);
        if (flagged)
            r.ambiguity_times.push_back(solution.time(k));

        double largest = 0.0;
        for (std::size_t i = 0; i < solution.config_count(); ++i) {
            const double w = solution.angles[i][k].omega_hat;
            r.max_omega_hat = std::max(r.max_omega_hat, w);
            largest = std::max(largest, w);
            if (!flagged)
                r.bound21_margin = std::min(r.bound21_margin, running_abs[k] - w);
        }
        // Single-S eigenvalues are +-w/2; the widest pair spans the largest w.
        if (!flagged)
            r.bound22_margin = std::min(r.bound22_margin, running_abs[k] - largest);

        const auto gap = magnus_gap_check(omega_eigenvalues(solution, k, system.s_count()),
                                          options.gap_tolerance);
        r.max_gap = std::max(r.max_gap, gap.max_gap);
        r.magnus_gap_nearest = std::min(r.magnus_gap_nearest, gap.nearest_violation);
    }
    r.magnus_ok = r.magnus_gap_nearest > options.gap_tolerance;
    return r;
}

} // namespace magcrit
