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

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "magcrit/propagation.hpp"
#include "magcrit/pulse.hpp"
#include "magcrit/spin_system.hpp"
#include "magcrit/su2.hpp"

namespace magcrit {

/// |sin(Omega_hat/2)| below this, with cos(Omega_hat/2) near -1, marks U = -E.
inline constexpr double kAmbiguityTolerance = 1e-8;
inline constexpr double kDefaultGapTolerance = 1e-6;

/// Elementary-propagator angles of Omega = Omega_x S_x + Omega_y S_y + Omega_z S_z.
struct OmegaAngles {
    double alpha = 0.0;     ///< (-pi, pi]
    double beta = 0.0;      ///< [0, pi]
    double omega_hat = 0.0; ///< >= 0
};

OmegaAngles angles_from_omega(double ox, double oy, double oz);
inline OmegaAngles angles_from_omega(const Vec3& v) { return angles_from_omega(v.x(), v.y(), v.z()); }
Vec3 omega_from_angles(const OmegaAngles& a);

/// Continuous Magnus exponent U_I(t) = exp(-i Omega(t)) per configuration.
struct MagnusSolution {
    double dt = 0.0;
    std::vector<std::vector<Vec3>> omega; ///< [config][k]
    std::vector<std::vector<OmegaAngles>> angles;
    std::vector<std::vector<char>> ambiguous; ///< U = -E within kAmbiguityTolerance

    std::size_t config_count() const noexcept { return omega.size(); }
    std::size_t point_count() const noexcept { return omega.empty() ? 0 : omega[0].size(); }
    double time(std::size_t k) const { return static_cast<double>(k) * dt; }
    bool ambiguous_at(std::size_t k) const;
};

/// Inverts the SU(2) exponential along the trajectory, choosing at each time
/// the logarithm branch nearest to the previous one (seeded with Omega(0) = 0).
/// Throws NumericalError when consecutive exponents jump by pi or more.
MagnusSolution extract_omega(const BlockTrajectory& trajectory,
                             Execution exec = Execution::parallel);

/// Eigenvalues m_s Omega_hat^{(i)}(t_k). With n equivalent S spins the total
/// m_s runs over -n/2..n/2, so each configuration contributes n + 1 values.
std::vector<double> omega_eigenvalues(const MagnusSolution& solution, std::size_t t_index,
                                      int s_count = 1);

struct GapCheck {
    bool ok = true;
    double nearest_violation = 0.0; ///< min over pairs, n != 0 of ||l_i - l_j| - 2 pi |n||
    int nearest_n = 1;
    double max_gap = 0.0;
};

GapCheck magnus_gap_check(const std::vector<double>& eigenvalues,
                          double tolerance = kDefaultGapTolerance);

struct CriterionReport {
    std::string pulse;
    double I_T = 0.0;
    double theta_T = 0.0;
    bool criterion23_met = false; ///< I(T) < 2 pi
    bool criterion25_met = false; ///< |theta(T)| < 2 pi
    double max_omega_hat = 0.0;
    double max_gap = 0.0;            ///< largest eigenvalue gap over the pulse
    double magnus_gap_nearest = 0.0; ///< closest approach to a nonzero multiple of 2 pi
    bool magnus_ok = true;
    double bound21_margin = 0.0; ///< min over t, i of I(t) - |Omega_hat^{(i)}(t)|
    double bound22_margin = 0.0; ///< min over t of I(t) - max single-S eigenvalue gap
    std::vector<double> ambiguity_times;
    long n_steps = 0;            ///< trajectory grid actually used
    double propagation_error = 0.0;
};

struct CriterionOptions {
    long n_steps = kDefaultSteps;
    double tol = 1e-9;
    double gap_tolerance = kDefaultGapTolerance;
    Execution exec = Execution::parallel;
};

/// Both criterion integrals plus a full propagation and extraction that
/// audits the eigenvalue bound and the implicit gap criterion.
CriterionReport explicit_criterion(const SpinSystem& system, const PulseShape& shape,
                                   const CriterionOptions& options = {});

/// Weak-amplitude estimate of every Omega_hat eigenvalue: int_0^t omega_1.
double weak_field_approx(const PulseShape& shape, double t, long n_steps = kDefaultSteps);

/// Spin vectors of the midpoint block Hamiltonians of a trajectory, [config][k].
std::vector<std::vector<Vec3>> sampled_hamiltonians(const BlockTrajectory& trajectory);

/// Cumulative Magnus partial sums of a piecewise-constant Hamiltonian.
/// Entry p holds Omega_1 + ... + Omega_{p+1} (Hermitian, U ~ exp(-i sum)).
struct MagnusTerms {
    std::array<Vec3, 3> term{};     ///< individual orders as spin vectors
    std::array<Block, 3> partial{}; ///< cumulative sums as 2x2 matrices
    int order = 0;
};

std::vector<MagnusTerms> magnus_partial_sums(const std::vector<std::vector<Vec3>>& hamiltonians,
                                             double dt, int order = 3);

} // namespace magcrit
