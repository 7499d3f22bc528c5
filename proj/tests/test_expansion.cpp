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


#include <doctest.h>

#include <cmath>

#include "magcrit/errors.hpp"
#include "magcrit/expansion.hpp"
#include "magcrit/magnus.hpp"
#include "magcrit/propagation.hpp"
#include "magcrit/standard_cases.hpp"
#include "oracles/oracles.hpp"

using namespace magcrit;

TEST_CASE("expansion point defaults to the identity") {
    const ExpansionPoint p;
    CHECK(p.constraint_residual() == 0.0);
    CHECK((reconstruct_propagator(p) - Block::Identity()).norm() == 0.0);
}

TEST_CASE("rhs conserves f^2 + |g|^2 to first order") {
    const ExpansionPoint y{0.6, Vec3(0.0, 0.48, 0.64)};
    const Vec3 h(std::cos(0.3), std::sin(0.3), 0.0);
    const auto d = expansion_rhs(y, h, 1234.0);
    CHECK(std::abs(y.f * d.df + y.g.dot(d.dg)) < 1e-10);
    const auto bad = oracle::footnote_rhs(y, h, 1234.0);
    CHECK(std::abs(y.f * bad.df + y.g.dot(bad.dg)) > 1.0);
}

TEST_CASE("reconstruction from (f, g) matches exp(-i phi n.S)") {
    const Vec3 v(0.3, -1.1, 0.7);
    const double phi = v.norm();
    const ExpansionPoint p{std::cos(phi / 2), std::sin(phi / 2) * v / phi};
    CHECK((reconstruct_propagator(p) - su2_exp(v)).norm() < 1e-14);
    const ExpansionPoint broken{1.0, Vec3(0.1, 0.0, 0.0)};
    CHECK_THROWS_AS(reconstruct_propagator(broken), NumericalError);
}

TEST_CASE("integrated expansion matches the propagator trajectory") {
    const auto sys = cases::sax();
    const auto shape = cases::gaussian(kPi / 2);
    const auto st = integrate_expansion(sys, shape);
    const auto tr = propagate_interaction(sys, shape);
    CHECK(st.max_constraint_residual() < 1e-8);
    for (std::size_t i = 0; i < st.config_count(); ++i)
        CHECK((reconstruct_propagator(st.points[i].back()) - tr.endpoint()[i]).norm() < 1e-6);
}

TEST_CASE("serial and parallel expansion integration agree exactly") {
    ExpansionOptions a, b;
    a.exec = Execution::serial;
    b.exec = Execution::parallel;
    a.tol = b.tol = 1e-7;
    const auto sa = integrate_expansion(cases::samx(), cases::sech(kPi), a);
    const auto sb = integrate_expansion(cases::samx(), cases::sech(kPi), b);
    REQUIRE(sa.n_steps == sb.n_steps);
    for (std::size_t i = 0; i < sa.config_count(); ++i) {
        CHECK(sa.points[i].back().f == sb.points[i].back().f);
        CHECK(sa.points[i].back().g == sb.points[i].back().g);
    }
}

TEST_CASE("angles from the expansion agree with the Magnus extraction") {
    const auto sys = cases::sa();
    const auto shape = cases::sech(kPi);
    ExpansionOptions eo;
    eo.n_steps = 2048;
    const auto st = integrate_expansion(sys, shape, eo);
    PropagationOptions po;
    po.n_steps = st.n_steps;
    po.tol = 1e-10;
    const auto tr = propagate_interaction(sys, shape, po);
    const auto sol = extract_omega(tr);
    for (std::size_t i = 0; i < st.config_count(); ++i) {
        const auto ang = angles_from_state(st.points[i]);
        const auto& last = ang.back();
        const auto ref = sol.angles[i].back();
        CHECK(last.omega_hat == doctest::Approx(ref.omega_hat).epsilon(1e-6));
        CHECK((omega_from_angles(last) - omega_from_angles(ref)).norm() < 1e-5);
    }
}

TEST_CASE("Omega_hat derivative quadrature is consistent with the trajectory") {
    const auto sys = cases::sa();
    const auto shape = cases::gaussian(kPi / 2);
    ExpansionOptions eo;
    eo.tol = 1e-10;
    const auto st = integrate_expansion(sys, shape, eo);
    const auto quad = omega_hat_quadrature(st, shape, sys);
    for (std::size_t i = 0; i < st.config_count(); ++i) {
        const auto ang = angles_from_state(st.points[i]);
        double worst = 0.0;
        for (std::size_t k = 0; k < ang.size(); ++k)
            worst = std::max(worst, std::abs(quad[i][k] - ang[k].omega_hat));
        CHECK(worst < 1e-5);
    }
}

TEST_CASE("footnote variant breaks the constraint on a 90 degree Gaussian") {
    const auto st =
        integrate_expansion_with(oracle::footnote_rhs, cases::sa(), cases::gaussian(kPi / 2));
    CHECK(st.max_constraint_residual() > 1e-2);
}
