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

#include "magcrit/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "magcrit/errors.hpp"

namespace magcrit {

ExpansionDerivative expansion_rhs(const ExpansionPoint& y, const Vec3& h, double amp) {
    const double half = 0.5 * amp;
    return {-half * h.dot(y.g), half * (y.f * h + h.cross(y.g))};
}

double ExpansionState::max_constraint_residual() const {
    double m = 0.0;
    for (const auto& seq : points)
        for (const auto& p : seq)
            m = std::max(m, std::abs(p.constraint_residual()));
    return m;
}

namespace {

/// Amplitude and phase at t_k and t_k + dt/2 for every step, shared by all
/// configurations. Index 2k is t_k, 2k+1 the midpoint, 2N the end.
struct FieldTable {
    double dt;
    std::vector<double> amp;
    std::vector<double> phase;
};

FieldTable tabulate(const PulseShape& shape, long n) {
    FieldTable f;
    f.dt = shape.duration() / static_cast<double>(n);
    const auto m = static_cast<std::size_t>(2 * n + 1);
    f.amp.resize(m);
    f.phase.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double t = 0.5 * static_cast<double>(j) * f.dt;
        f.amp[j] = shape.amplitude(t);
        f.phase[j] = shape.phase(t);
        if (!std::isfinite(f.amp[j]) || !std::isfinite(f.phase[j]))
            throw InputError("pulse '" + shape.name() + "' is not finite at t = " +
                             std::to_string(t));
    }
    return f;
}

ExpansionPoint axpy(const ExpansionPoint& y, double s, const ExpansionDerivative& d) {
    return {y.f + s * d.df, y.g + s * d.dg};
}

ExpansionPoint rk4_step(const ExpansionRhs& rhs, const ExpansionPoint& y, double offset,
                        const FieldTable& tab, std::size_t k) {
    const double dt = tab.dt;
    const double t0 = static_cast<double>(k) * dt;
    auto unit_h = [&](std::size_t j, double t) {
        const double a = -offset * t + tab.phase[j];
        return Vec3(std::cos(a), std::sin(a), 0.0);
    };
    const std::size_t j0 = 2 * k, j1 = 2 * k + 1, j2 = 2 * k + 2;
    const Vec3 h0 = unit_h(j0, t0), h1 = unit_h(j1, t0 + 0.5 * dt), h2 = unit_h(j2, t0 + dt);

    const auto k1 = rhs(y, h0, tab.amp[j0]);
    const auto k2 = rhs(axpy(y, 0.5 * dt, k1), h1, tab.amp[j1]);
    const auto k3 = rhs(axpy(y, 0.5 * dt, k2), h1, tab.amp[j1]);
    const auto k4 = rhs(axpy(y, dt, k3), h2, tab.amp[j2]);
    return {y.f + dt / 6.0 * (k1.df + 2.0 * k2.df + 2.0 * k3.df + k4.df),
            y.g + dt / 6.0 * (k1.dg + 2.0 * k2.dg + 2.0 * k3.dg + k4.dg)};
}

void integrate_one(const ExpansionRhs& rhs, double offset, const FieldTable& tab, long n,
                   std::vector<ExpansionPoint>* store, ExpansionPoint& end) {
    ExpansionPoint y;
    if (store) {
        store->resize(static_cast<std::size_t>(n) + 1);
        (*store)[0] = y;
    }
    for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
        y = rk4_step(rhs, y, offset, tab, k);
        if (store)
            (*store)[k + 1] = y;
    }
    end = y;
}

void run_all(const ExpansionRhs& rhs, const std::vector<double>& offsets, const FieldTable& tab,
             long n, Execution exec, std::vector<std::vector<ExpansionPoint>>* store,
             std::vector<ExpansionPoint>& ends) {
    ends.assign(offsets.size(), ExpansionPoint{});
    if (store)
        store->assign(offsets.size(), {});
    const auto count = static_cast<long>(offsets.size());
    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < count; ++i) {
            const auto u = static_cast<std::size_t>(i);
            integrate_one(rhs, offsets[u], tab, n, store ? &(*store)[u] : nullptr, ends[u]);
        }
    } else {
        for (std::size_t u = 0; u < offsets.size(); ++u)
            integrate_one(rhs, offsets[u], tab, n, store ? &(*store)[u] : nullptr, ends[u]);
    }
}

double max_change(const std::vector<ExpansionPoint>& a, const std::vector<ExpansionPoint>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = std::sqrt((a[i].f - b[i].f) * (a[i].f - b[i].f) +
                                   (a[i].g - b[i].g).squaredNorm());
        m = std::max(m, d);
    }
    return m;
}

} // namespace

ExpansionState integrate_expansion_with(const ExpansionRhs& rhs, const SpinSystem& system,
                                        const PulseShape& shape,
                                        const ExpansionOptions& options) {
    if (options.n_steps < 1)
        throw InputError("n_steps must be >= 1");
    if (!(options.tol > 0.0))
        throw InputError("tol must be positive");

    const auto offsets = effective_s_offsets(system).values();
    long n = options.n_steps;
    std::vector<ExpansionPoint> coarse, fine;
    run_all(rhs, offsets, tabulate(shape, n), n, options.exec, nullptr, coarse);
    int refinements = 0;
    double estimate = 0.0;
    for (;;) {
        if (2 * n > options.max_steps)
            throw ConvergenceError("expansion integration did not reach tol " +
                                       std::to_string(options.tol) + " within " +
                                       std::to_string(options.max_steps) + " steps",
                                   estimate, n);
        run_all(rhs, offsets, tabulate(shape, 2 * n), 2 * n, options.exec, nullptr, fine);
        estimate = max_change(coarse, fine);
        ++refinements;
        n *= 2;
        if (estimate < options.tol)
            break;
        coarse.swap(fine);
    }

    ExpansionState state;
    state.n_steps = n;
    state.dt = shape.duration() / static_cast<double>(n);
    state.refinements = refinements;
    state.error_estimate = estimate;
    state.offsets = offsets;
    std::vector<ExpansionPoint> ends;
    run_all(rhs, offsets, tabulate(shape, n), n, options.exec, &state.points, ends);
    return state;
}

ExpansionState integrate_expansion(const SpinSystem& system, const PulseShape& shape,
                                   const ExpansionOptions& options) {
    return integrate_expansion_with(expansion_rhs, system, shape, options);
}

std::vector<std::vector<double>> omega_hat_quadrature(const ExpansionState& state,
                                                      const PulseShape& shape,
                                                      const SpinSystem& system) {
    const auto offsets = effective_s_offsets(system).values();
    if (offsets.size() != state.config_count())
        throw InputError("expansion state does not belong to this spin system");
    std::vector<std::vector<double>> out(state.config_count());
    const double dt = state.dt;
    for (std::size_t i = 0; i < state.config_count(); ++i) {
        const auto& pts = state.points[i];
        auto& w = out[i];
        w.assign(pts.size(), 0.0);
        double acc = 0.0;
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
            const double t = (static_cast<double>(k) + 0.5) * dt;
            const double amp = shape.amplitude(t);
            const double a = -offsets[i] * t + shape.phase(t);
            const Vec3 h(std::cos(a), std::sin(a), 0.0);
            const Vec3 gm = 0.5 * (pts[k].g + pts[k + 1].g);
            const double gn = gm.norm();
            const double proj = gn < 1e-10 ? 1.0 : h.dot(gm / gn);
            acc += amp * proj * dt;
            w[k + 1] = acc;
        }
    }
    return out;
}

Block reconstruct_propagator(const ExpansionPoint& p) {
    if (std::abs(p.constraint_residual()) > 1e-6)
        throw NumericalError("expansion state violates f^2 + |g|^2 = 1 by " +
                             std::to_string(p.constraint_residual()));
    Block u;
    u << std::complex<double>(p.f, -p.g.z()), std::complex<double>(-p.g.y(), -p.g.x()),
        std::complex<double>(p.g.y(), -p.g.x()), std::complex<double>(p.f, p.g.z());
    return u;
}

namespace {

OmegaAngles direction_angles(const Vec3& n, double omega) {
    OmegaAngles a;
    a.alpha = std::atan2(n.y(), n.x());
    if (a.alpha == -kPi)
        a.alpha = kPi;
    a.beta = std::atan2(std::hypot(n.x(), n.y()), n.z());
    a.omega_hat = omega;
    return a;
}

constexpr double kSmallG = 1e-10;

} // namespace

OmegaAngles angles_from_state(const ExpansionPoint& p) {
    const double s = p.g.norm();
    if (s < kSmallG)
        return {0.0, 0.0, 2.0 * std::atan2(s, p.f)};
    return direction_angles(p.g / s, 2.0 * std::atan2(s, p.f));
}

std::vector<OmegaAngles> angles_from_state(const std::vector<ExpansionPoint>& sequence) {
    std::vector<OmegaAngles> out;
    out.reserve(sequence.size());
    constexpr double kFourPi = 2.0 * kTwoPi;
    double sign = 1.0;
    Vec3 prev_dir = Vec3::Zero();
    double prev_phi = 0.0;
    for (const auto& p : sequence) {
        const double s = p.g.norm();
        Vec3 dir = Vec3::Zero();
        if (s >= kSmallG) {
            dir = p.g / s;
            // g passes through zero: the raw direction reverses, the angle keeps going.
            if (prev_dir.squaredNorm() > 0.0 && dir.dot(prev_dir) < 0.0)
                sign = -sign;
            prev_dir = dir;
        }
        double phi = 2.0 * std::atan2(sign * s, p.f);
        phi += kFourPi * std::round((prev_phi - phi) / kFourPi);
        prev_phi = phi;

        if (s < kSmallG) {
            out.push_back({0.0, 0.0, std::abs(phi)});
            continue;
        }
        Vec3 n = sign * dir;
        if (phi < 0.0)
            n = -n;
        out.push_back(direction_angles(n, std::abs(phi)));
    }
    return out;
}

} // namespace magcrit
