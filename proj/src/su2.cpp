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

#include "magcrit/su2.hpp"

#include <cmath>
#include <complex>

namespace magcrit {

namespace {
constexpr std::complex<double> I{0.0, 1.0};
}

Block spin_x() {
    Block m;
    m << 0.0, 0.5, 0.5, 0.0;
    return m;
}

Block spin_y() {
    Block m;
    m << 0.0, -0.5 * I, 0.5 * I, 0.0;
    return m;
}

Block spin_z() {
    Block m;
    m << 0.5, 0.0, 0.0, -0.5;
    return m;
}

Block spin_dot(const Vec3& v) {
    Block m;
    m << 0.5 * v.z(), 0.5 * std::complex<double>(v.x(), -v.y()),
        0.5 * std::complex<double>(v.x(), v.y()), -0.5 * v.z();
    return m;
}

Vec3 spin_vector(const Block& h) {
    return {(h(1, 0) + h(0, 1)).real(), (h(1, 0) - h(0, 1)).imag(), (h(0, 0) - h(1, 1)).real()};
}

Block su2_exp(const Vec3& v) {
    const double angle = v.norm();
    const double c = std::cos(angle / 2);
    if (angle == 0.0)
        return Block::Identity();
    const Vec3 sn = (std::sin(angle / 2) / angle) * v;
    // c E - i (sn).sigma
    Block u;
    u << std::complex<double>(c, -sn.z()), std::complex<double>(-sn.y(), -sn.x()),
        std::complex<double>(sn.y(), -sn.x()), std::complex<double>(c, sn.z());
    return u;
}

Block su2_step(const Block& h, double dt) { return su2_exp(dt * spin_vector(h)); }

Su2Quaternion to_quaternion(const Block& u) {
    Su2Quaternion q;
    q.scalar = 0.5 * (u(0, 0) + u(1, 1)).real();
    q.vector = Vec3(-0.5 * (u(0, 1) + u(1, 0)).imag(), 0.5 * (u(1, 0) - u(0, 1)).real(),
                    -0.5 * (u(0, 0) - u(1, 1)).imag());
    return q;
}

double unitarity_error(const Block& u) {
    return (u * u.adjoint() - Block::Identity()).norm();
}

} // namespace magcrit
