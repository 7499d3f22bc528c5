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

#include "magcrit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "magcrit/errors.hpp"
#include "magcrit/expansion.hpp"
#include "magcrit/magnus.hpp"
#include "magcrit/propagation.hpp"
#include "magcrit/standard_cases.hpp"

namespace magcrit {

namespace {

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

CheckResult run(const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
    try {
        auto [ok, detail] = fn();
        return {name, ok, detail};
    } catch (const std::exception& e) {
        return {name, false, std::string("error: ") + e.what()};
    }
}

} // namespace

std::vector<CheckResult> run_invariant_suite(Execution exec) {
    std::vector<CheckResult> out;
    const auto system = cases::samx();
    const auto pulse = cases::gaussian(kPi / 2);
    PropagationOptions popt;
    popt.exec = exec;

    out.push_back(run("block unitarity (4096 steps, SAMX)", [&] {
        const auto tr = propagate_fixed(system, pulse, 4096, exec);
        double worst = 0.0;
        for (const auto& seq : tr.blocks)
            for (const auto& u : seq)
                worst = std::max(worst, unitarity_error(u));
        return std::pair{worst < 1e-10, "max ||UU^+ - E|| = " + fmt(worst)};
    }));

    out.push_back(run("serial and parallel kernels agree", [&] {
        const auto offsets = effective_s_offsets(system).values();
        const auto s = sample(pulse, 2048);
        const auto a = kernels::propagate_endpoints(offsets, s, Execution::serial);
        const auto b = kernels::propagate_endpoints(offsets, s, Execution::parallel);
        double worst = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            worst = std::max(worst, (a[i] - b[i]).norm());
        return std::pair{worst == 0.0, "max difference " + fmt(worst)};
    }));

    out.push_back(run("Magnus reconstruction exp(-i Omega) = U_I", [&] {
        const auto tr = propagate_interaction(system, pulse, popt);
        const auto sol = extract_omega(tr, exec);
        double worst = 0.0;
        for (std::size_t i = 0; i < sol.config_count(); ++i)
            for (std::size_t k = 0; k < sol.point_count(); ++k)
                if (!sol.ambiguous[i][k])
                    worst = std::max(worst, (su2_exp(sol.omega[i][k]) - tr.blocks[i][k]).norm());
        return std::pair{worst < 1e-8, "max residual " + fmt(worst)};
    }));

    out.push_back(run("angle decomposition round trip", [&] {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(-10.0, 10.0);
        double worst = 0.0;
        for (int n = 0; n < 1000; ++n) {
            const Vec3 v(u(rng), u(rng), u(rng));
            worst = std::max(worst, (omega_from_angles(angles_from_omega(v)) - v).norm());
        }
        return std::pair{worst < 1e-12, "max error " + fmt(worst)};
    }));

    out.push_back(run("eigenvalue bound and criterion implication (random sweep)", [&] {
        std::mt19937_64 rng(20260101);
        std::uniform_real_distribution<double> target(0.5 * kPi, 3.0 * kPi);
        int checked = 0, violations = 0, implication_failures = 0;
        double worst = 1e300;
        for (int n = 0; n < 24; ++n) {
            const auto sys = cases::random_small_system(rng);
            const auto shape = cases::random_fourier(rng, target(rng));
            CriterionOptions copt;
            copt.tol = 1e-8;
            copt.exec = exec;
            CriterionReport r;
            try {
                r = explicit_criterion(sys, shape, copt);
            } catch (const NumericalError&) {
                continue;
            }
            ++checked;
            worst = std::min(worst, r.bound21_margin);
            if (r.bound21_margin < -1e-6)
                ++violations;
            if (r.criterion23_met && !r.magnus_ok)
                ++implication_failures;
        }
        return std::pair{checked > 0 && violations == 0 && implication_failures == 0,
                         std::to_string(checked) + " cases, min margin " + fmt(worst) + ", " +
                             std::to_string(implication_failures) + " implication failures"};
    }));

    out.push_back(run("expansion form matches propagator", [&] {
        ExpansionOptions eopt;
        eopt.exec = exec;
        const auto state = integrate_expansion(system, pulse, eopt);
        const auto tr = propagate_interaction(system, pulse, popt);
        double worst = 0.0;
        for (std::size_t i = 0; i < state.config_count(); ++i)
            worst = std::max(worst,
                             (reconstruct_propagator(state.points[i].back()) - tr.blocks[i].back())
                                 .norm());
        const double residual = state.max_constraint_residual();
        return std::pair{worst < 1e-6 && residual < 1e-8,
                         "endpoint " + fmt(worst) + ", constraint " + fmt(residual)};
    }));

    out.push_back(run("non-negative envelopes: I(T) = theta(T)", [&] {
        double worst = 0.0;
        for (const auto& s : {cases::gaussian(kPi / 2), cases::sech(kPi)})
            worst = std::max(worst, std::abs(abs_amplitude_integral(s, s.duration()) -
                                             flip_angle(s, s.duration())));
        return std::pair{worst < 1e-9, "max |I - theta| = " + fmt(worst)};
    }));

    out.push_back(run("2 pi hard pulse degeneracy", [&] {
        const auto tr = propagate_fixed(cases::isolated_s(), cases::hard(kTwoPi), 64, exec);
        const auto sol = extract_omega(tr, exec);
        const double minus_e = (tr.blocks[0].back() + Block::Identity()).norm();
        const double hat = sol.angles[0].back().omega_hat;
        const auto gap = magnus_gap_check(omega_eigenvalues(sol, sol.point_count() - 1));
        const bool ok = minus_e < 1e-10 && sol.ambiguous[0].back() &&
                        std::abs(hat - kTwoPi) < 1e-6 && !gap.ok && gap.nearest_n == 1;
        return std::pair{ok, "||U + E|| = " + fmt(minus_e) + ", Omega_hat - 2pi = " +
                                 fmt(hat - kTwoPi)};
    }));

    out.push_back(run("third-order Magnus beats first order", [&] {
        const auto sys = cases::sa();
        const auto tr = propagate_interaction(sys, pulse, popt);
        const auto terms = magnus_partial_sums(sampled_hamiltonians(tr), tr.dt, 3);
        double e1 = 0.0, e3 = 0.0;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const Block u = tr.blocks[i].back();
            e1 = std::max(e1, (su2_exp(spin_vector(terms[i].partial[0])) - u).norm());
            e3 = std::max(e3, (su2_exp(spin_vector(terms[i].partial[2])) - u).norm());
        }
        return std::pair{e3 < e1, "order 1: " + fmt(e1) + ", order 3: " + fmt(e3)};
    }));

    return out;
}

} // namespace magcrit
