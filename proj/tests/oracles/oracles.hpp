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

// Test-only reference implementations, written independently of the library
// kernels.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "magcrit/expansion.hpp"
#include "magcrit/pulse.hpp"
#include "magcrit/spin_system.hpp"
#include "magcrit/su2.hpp"

namespace oracle {

/// Full-space static Hamiltonian H0 (diagonal, rad/s) in the library basis:
/// S spins slowest, then I spins in declaration order, m = +1/2 as bit 0.
Eigen::VectorXd full_h0_diagonal(const magcrit::SpinSystem& system);

/// Total S_x, S_y, S_z in the full space.
Eigen::MatrixXcd full_s_operator(const magcrit::SpinSystem& system, int axis);

/// Interaction-frame propagator at T by dense time stepping: every slice is
/// exponentiated through an eigendecomposition of the full-space Hamiltonian.
Eigen::MatrixXcd dense_interaction_propagator(const magcrit::SpinSystem& system,
                                              const magcrit::PulseShape& shape, long n_steps);

/// Magnus terms 1..3 of a piecewise-constant Hamiltonian by explicit nested
/// commutator sums over slice triples (O(N^3)).
std::vector<magcrit::Block> brute_force_magnus(const std::vector<magcrit::Block>& h, double dt);

/// Expansion right-hand side as printed in a historical footnote: wrong
/// prefactor on df and the first component of h x g negated.
magcrit::ExpansionDerivative footnote_rhs(const magcrit::ExpansionPoint& y,
                                          const magcrit::Vec3& h, double amp);

} // namespace oracle
