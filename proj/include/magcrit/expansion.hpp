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

#include <functional>
#include <vector>

#include "magcrit/kernels.hpp"
#include "magcrit/magnus.hpp"
#include "magcrit/pulse.hpp"
#include "magcrit/spin_system.hpp"
#include "magcrit/su2.hpp"

namespace magcrit {

/// U_I = f E - 2i (g_x S_x + g_y S_y + g_z S_z), f^2 + |g|^2 = 1.
struct ExpansionPoint {
    double f = 1.0;
    Vec3 g = Vec3::Zero();

    double constraint_residual() const { return f * f + g.squaredNorm() - 1.0; }
};

struct ExpansionDerivative {
    double df = 0.0;
    Vec3 dg = Vec3::Zero();
};

/// df/dt = -(w1/2) h.g,  dg/dt = (w1/2)(f h + h x g).
ExpansionDerivative expansion_rhs(const ExpansionPoint& y, const Vec3& h, double amp);

using ExpansionRhs =
    std::function<ExpansionDerivative(const ExpansionPoint&, const Vec3& h, double amp)>;

/// Expansion coefficients per configuration on the grid t_k = k dt.
struct ExpansionState {
    double dt = 0.0;
    long n_steps = 0;
    int refinements = 0;
    double error_estimate = 0.0;
    std::vector<double> offsets;
    std::vector<std::vector<ExpansionPoint>> points; ///< [config][k]

    std::size_t config_count() const noexcept { return points.size(); }
    std::size_t point_count() const noexcept { return points.empty() ? 0 : points[0].size(); }
    double time(std::size_t k) const { return static_cast<double>(k) * dt; }
    double max_constraint_residual() const;
};

struct ExpansionOptions {
    long n_steps = kDefaultSteps;
    double tol = 1e-9;
    long max_steps = long{1} << 22;
    Execution exec = Execution::parallel;
};

/// Classical RK4 on a fixed grid with step doubling until the endpoint
/// states of N and 2N steps differ by less than tol.
ExpansionState integrate_expansion(const SpinSystem& system, const PulseShape& shape,
                                   const ExpansionOptions& options = {});

/// Same integrator with a caller-supplied right-hand side.
ExpansionState integrate_expansion_with(const ExpansionRhs& rhs, const SpinSystem& system,
                                        const PulseShape& shape,
                                        const ExpansionOptions& options = {});

/// Omega_hat(t) = int_0^t w1 (h . n), n = g / |g|, cumulative midpoint rule.
/// Falls back to n = h where |g| < 1e-10. Result is [config][k].
std::vector<std::vector<double>> omega_hat_quadrature(const ExpansionState& state,
                                                      const PulseShape& shape,
                                                      const SpinSystem& system);

/// Throws NumericalError if |f^2 + |g|^2 - 1| > 1e-6.
Block reconstruct_propagator(const ExpansionPoint& point);

/// Angles of a single point (principal: Omega in [0, 2 pi]).
OmegaAngles angles_from_state(const ExpansionPoint& point);

/// Angles along a sequence, with Omega unwrapped through the g = 0 crossings
/// so it continues past 2 pi.
std::vector<OmegaAngles> angles_from_state(const std::vector<ExpansionPoint>& sequence);

} // namespace magcrit
