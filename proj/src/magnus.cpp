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

#include "magcrit/magnus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "magcrit/errors.hpp"

namespace magcrit {

OmegaAngles angles_from_omega(double ox, double oy, double oz) {
    OmegaAngles a;
    a.alpha = std::atan2(oy, ox);
    if (a.alpha == -kPi)
        a.alpha = kPi;
    a.beta = std::atan2(std::hypot(ox, oy), oz);
    a.omega_hat = std::sqrt(ox * ox + oy * oy + oz * oz);
    return a;
}

Vec3 omega_from_angles(const OmegaAngles& a) {
    const double sb = std::sin(a.beta);
    return a.omega_hat * Vec3(std::cos(a.alpha) * sb, std::sin(a.alpha) * sb, std::cos(a.beta));
}

bool MagnusSolution::ambiguous_at(std::size_t k) const {
    for (const auto& flags : ambiguous)
        if (flags[k])
            return true;
    return false;
}

namespace {

constexpr double kFourPi = 2.0 * kTwoPi;

void track_one(const std::vector<Block>& blocks, double dt, std::vector<Vec3>& omega,
               std::vector<OmegaAngles>& angles, std::vector<char>& flags) {
    const std::size_t n = blocks.size();
    omega.assign(n, Vec3::Zero());
    angles.assign(n, OmegaAngles{});
    flags.assign(n, 0);

    Vec3 prev = Vec3::Zero();
    for (std::size_t k = 0; k < n; ++k) {
        const auto q = to_quaternion(blocks[k]);
        const double c = q.scalar;
        const double s = q.vector.norm();
        const bool degenerate = s < kAmbiguityTolerance;
        flags[k] = degenerate && c <= -1.0 + kAmbiguityTolerance;

        Vec3 axis;
        if (!degenerate)
            axis = q.vector / s;
        else if (prev.norm() > 1e-12)
            axis = prev.normalized();
        else if (s > 0.0)
            axis = q.vector / s;
        else
            axis = Vec3::UnitX();

        // Solutions of exp(-i v.S) = U lie on the axis at base + 4 pi k.
        const double base = 2.0 * std::atan2(s, c);
        const double along = prev.dot(axis);
        const double k_near = std::round((along - base) / kFourPi);
        const Vec3 v = (base + kFourPi * k_near) * axis;

        if ((v - prev).norm() >= kPi)
            throw NumericalError("Magnus exponent jumps by " + std::to_string((v - prev).norm()) +
                                 " rad at t = " + std::to_string(static_cast<double>(k) * dt) +
                                 "; increase n_steps");
        omega[k] = v;
        angles[k] = angles_from_omega(v);
        prev = v;
    }
}

} // namespace

MagnusSolution extract_omega(const BlockTrajectory& trajectory, Execution exec) {
    MagnusSolution sol;
    sol.dt = trajectory.dt;
    const std::size_t n_cfg = trajectory.config_count();
    sol.omega.resize(n_cfg);
    sol.angles.resize(n_cfg);
    sol.ambiguous.resize(n_cfg);

    const auto count = static_cast<long>(n_cfg);
    if (exec == Execution::parallel) {
        // Exceptions may not cross the parallel region; collect and rethrow.
        std::vector<std::string> errors(n_cfg);
#pragma omp parallel for schedule(static)
        for (long i = 0; i < count; ++i) {
            const auto u = static_cast<std::size_t>(i);
            try {
                track_one(trajectory.blocks[u], trajectory.dt, sol.omega[u], sol.angles[u],
                          sol.ambiguous[u]);
            } catch (const std::exception& e) {
                errors[u] = e.what();
            }
        }
        for (std::size_t i = 0; i < n_cfg; ++i)
            if (!errors[i].empty())
                throw NumericalError("configuration " + std::to_string(i) + ": " + errors[i]);
    } else {
        for (std::size_t i = 0; i < n_cfg; ++i) {
            try {
                track_one(trajectory.blocks[i], trajectory.dt, sol.omega[i], sol.angles[i],
                          sol.ambiguous[i]);
            } catch (const NumericalError& e) {
                throw NumericalError("configuration " + std::to_string(i) + ": " + e.what());
            }
        }
    }
    return sol;
}

std::vector<double> omega_eigenvalues(const MagnusSolution& solution, std::size_t t_index,
                                      int s_count) {
    if (t_index >= solution.point_count())
        throw InputError("time index out of range");
    if (s_count < 1)
        throw InputError("s_count must be >= 1");
    std::vector<double> out;
    out.reserve(solution.config_count() * static_cast<std::size_t>(s_count + 1));
    for (std::size_t i = 0; i < solution.config_count(); ++i) {
        const double w = solution.angles[i][t_index].omega_hat;
        for (int j = 0; j <= s_count; ++j) {
            const double m = 0.5 * s_count - j;
            out.push_back(m * w);
        }
    }
    return out;
}

GapCheck magnus_gap_check(const std::vector<double>& eigenvalues, double tolerance) {
    if (!(tolerance > 0.0))
        throw InputError("gap tolerance must be positive");
    GapCheck g;
    g.nearest_violation = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
        for (std::size_t j = i + 1; j < eigenvalues.size(); ++j) {
            const double gap = std::abs(eigenvalues[i] - eigenvalues[j]);
            g.max_gap = std::max(g.max_gap, gap);
            const double n = std::max(1.0, std::round(gap / kTwoPi));
            const double d = std::abs(gap - kTwoPi * n);
            if (d < g.nearest_violation) {
                g.nearest_violation = d;
                g.nearest_n = static_cast<int>(n);
            }
        }
    }
    g.ok = g.nearest_violation > tolerance;
    return g;
}

double weak_field_approx(const PulseShape& shape, double t, long n_steps) {
    return flip_angle(shape, t, n_steps);
}

std::vector<std::vector<Vec3>> sampled_hamiltonians(const BlockTrajectory& trajectory) {
    std::vector<std::vector<Vec3>> out(trajectory.config_count());
    const auto& p = trajectory.pulse;
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].reserve(p.size());
        for (std::size_t k = 0; k < p.size(); ++k)
            out[i].push_back(
                kernels::field_vector(trajectory.offsets[i], p.amps[k], p.phases[k], p.times[k]));
    }
    return out;
}

std::vector<MagnusTerms> magnus_partial_sums(const std::vector<std::vector<Vec3>>& hamiltonians,
                                             double dt, int order) {
    if (order < 1 || order > 3)
        throw InputError("Magnus order must be 1, 2 or 3");
    std::vector<MagnusTerms> out;
    out.reserve(hamiltonians.size());

    // With A = a.S, [a.S, b.S] = i (a x b).S, so every term is a real spin vector.
    for (const auto& h : hamiltonians) {
        const std::size_t n = h.size();
        std::vector<Vec3> a(n);
        for (std::size_t k = 0; k < n; ++k)
            a[k] = dt * h[k];

        MagnusTerms t;
        t.order = order;
        Vec3 prefix = Vec3::Zero(); // sum_{j<k} a_j
        Vec3 o1 = Vec3::Zero(), o2 = Vec3::Zero(), o3 = Vec3::Zero();

        std::vector<Vec3> suffix; // sum_{j>k} a_j
        if (order >= 3) {
            suffix.assign(n, Vec3::Zero());
            Vec3 acc = Vec3::Zero();
            for (std::size_t k = n; k-- > 0;) {
                suffix[k] = acc;
                acc += a[k];
            }
        }

        Vec3 nested = Vec3::Zero(); // sum_{j<k} a_j x prefix_j
        for (std::size_t k = 0; k < n; ++k) {
            o1 += a[k];
            if (order >= 2)
                o2 += 0.5 * a[k].cross(prefix);
            if (order >= 3) {
                // Ordered triples t3 < t2 < t1 in distinct slices.
                o3 += a[k].cross(nested);
                o3 += prefix.cross(a[k].cross(suffix[k]));
                // Two times sharing a slice (half the slice-square measure).
                o3 += 0.5 * a[k].cross(a[k].cross(prefix));
                o3 += 0.5 * a[k].cross(a[k].cross(suffix[k]));
                nested += a[k].cross(prefix);
            }
            prefix += a[k];
        }
        o3 /= 6.0;

        t.term = {o1, o2, o3};
        Vec3 sum = Vec3::Zero();
        for (int p = 0; p < 3; ++p) {
            if (p < order)
                sum += t.term[static_cast<std::size_t>(p)];
            t.partial[static_cast<std::size_t>(p)] = spin_dot(sum);
        }
        out.push_back(t);
    }
    return out;
}

} // namespace magcrit
