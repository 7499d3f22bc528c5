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

#include <Eigen/Dense>

namespace magcrit {

using Block = Eigen::Matrix2cd;
using Vec3 = Eigen::Vector3d;

/// Spin-1/2 operators S_p = sigma_p / 2.
Block spin_x();
Block spin_y();
Block spin_z();

/// v.S = v_x S_x + v_y S_y + v_z S_z
Block spin_dot(const Vec3& v);

/// Vector v of a traceless Hermitian 2x2 matrix H = v.S.
Vec3 spin_vector(const Block& h);

/// exp(-i v.S) = cos(|v|/2) E - i sin(|v|/2) (v/|v|).sigma, closed form.
Block su2_exp(const Vec3& v);

/// exp(-i H dt) for traceless Hermitian H.
Block su2_step(const Block& h, double dt);

/// Unit quaternion (c, s n) with U = c E - i s (n.sigma); requires det U = 1.
struct Su2Quaternion {
    double scalar;
    Vec3 vector;
};
Su2Quaternion to_quaternion(const Block& u);

/// ||U U^dagger - E||_F
double unitarity_error(const Block& u);

} // namespace magcrit
