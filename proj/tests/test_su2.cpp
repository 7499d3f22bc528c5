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
#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "magcrit/spin_system.hpp"
#include "magcrit/su2.hpp"

using namespace magcrit;

namespace {

Vec3 random_vec(std::mt19937_64& rng, double scale) {
    std::normal_distribution<double> g(0.0, scale);
    return {g(rng), g(rng), g(rng)};
}

} // namespace

TEST_CASE("spin operators satisfy [Sx, Sy] = i Sz") {
    const Block c = spin_x() * spin_y() - spin_y() * spin_x();
    CHECK((c - std::complex<double>(0.0, 1.0) * spin_z()).norm() < 1e-15);
    CHECK(spin_z()(0, 0).real() == 0.5);
}

TEST_CASE("spin_vector inverts spin_dot") {
    std::mt19937_64 rng(1);
    for (int n = 0; n < 20; ++n) {
        const Vec3 v = random_vec(rng, 3.0);
        CHECK((spin_vector(spin_dot(v)) - v).norm() < 1e-14);
    }
}

TEST_CASE("closed-form su2_exp matches the matrix exponential") {
    std::mt19937_64 rng(2);
    for (double scale : {1e-6, 0.1, 1.0, 5.0, 20.0}) {
        const Vec3 v = random_vec(rng, scale);
        const Eigen::Matrix2cd ref =
            (std::complex<double>(0.0, -1.0) * spin_dot(v)).exp();
        CHECK((su2_exp(v) - ref).norm() < 1e-13 * std::max(1.0, scale));
        CHECK(unitarity_error(su2_exp(v)) < 1e-14);
    }
    CHECK((su2_exp(Vec3::Zero()) - Block::Identity()).norm() == 0.0);
}

TEST_CASE("a 2 pi rotation gives minus identity") {
    const Block u = su2_exp(Vec3(kTwoPi, 0.0, 0.0));
    CHECK((u + Block::Identity()).norm() < 1e-15);
}

TEST_CASE("su2_step exponentiates a spin Hamiltonian over dt") {
    const Vec3 h(100.0, -50.0, 20.0);
    CHECK((su2_step(spin_dot(h), 1e-3) - su2_exp(h * 1e-3)).norm() < 1e-15);
}

TEST_CASE("quaternion of exp(-i phi n.S) is (cos phi/2, sin phi/2 n)") {
    std::mt19937_64 rng(3);
    for (int n = 0; n < 20; ++n) {
        const Vec3 v = random_vec(rng, 2.0);
        const double phi = v.norm();
        const auto q = to_quaternion(su2_exp(v));
        CHECK(q.scalar == doctest::Approx(std::cos(phi / 2)).epsilon(1e-14));
        CHECK((q.vector - std::sin(phi / 2) * v / phi).norm() < 1e-14);
    }
}
