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

// Randomized and convergence properties spanning several modules.

#include <doctest.h>

#include <cmath>
#include <random>

#include "magcrit/expansion.hpp"
#include "magcrit/magnus.hpp"
#include "magcrit/propagation.hpp"
#include "magcrit/standard_cases.hpp"
#include "magcrit/verify.hpp"

using namespace magcrit;

TEST_CASE("propagator converges at second order in the slice width") {
    const auto sys = cases::sax();
    const auto shape = cases::gaussian(kPi / 2);
    auto endpoint_diff = [&](long n) {
        const auto a = propagate_fixed(sys, shape, n).endpoint();
        const auto b = propagate_fixed(sys, shape, 2 * n).endpoint();
        double d = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
            d = std::max(d, (a[i] - b[i]).norm());
        return d;
    };
    double prev = endpoint_diff(64);
    for (long n = 128; n <= 1024; n *= 2) {
        const double d = endpoint_diff(n);
        CHECK(prev / d > 3.0);
        prev = d;
    }
}

TEST_CASE("time compression with offsets scaled leaves the propagator unchanged") {
    const auto shape = cases::sech(kPi);
    const auto sys = SpinSystem::from_hz(1, 40.0, {{200.0, 9.0}}, {});
    const auto fast = SpinSystem::from_hz(1, 160.0, {{800.0, 36.0}}, {});
    const auto a = propagate_fixed(sys, shape, 1024).endpoint();
    const auto b = propagate_fixed(fast, shape.time_compressed(4.0), 1024).endpoint();
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK((a[i] - b[i]).norm() < 1e-12);
}

TEST_CASE("Omega_hat never exceeds I(t) on random pulses") {
    std::mt19937_64 rng(99);
    for (int n = 0; n < 20; ++n) {
        const auto sys = cases::random_small_system(rng);
        const auto shape = cases::random_fourier(rng, 5.0);
        const auto r = explicit_criterion(sys, shape);
        CHECK(r.bound21_margin >= -1e-6);
        if (sys.s_count() == 1 && r.criterion23_met)
            CHECK(r.magnus_ok);
    }
}

TEST_CASE("invariant suite passes serially and in parallel") {
    for (auto exec : {Execution::serial, Execution::parallel}) {
        for (const auto& r : run_invariant_suite(exec)) {
            CAPTURE(r.name);
            CAPTURE(r.detail);
            CHECK(r.passed);
        }
    }
}
