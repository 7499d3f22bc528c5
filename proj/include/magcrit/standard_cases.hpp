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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "magcrit/pulse.hpp"
#include "magcrit/spin_system.hpp"

namespace magcrit::cases {

/// Small reference systems shared by the verification suite, the tests and
/// the benchmark. Offsets and couplings are typical 1H values in Hz.
SpinSystem isolated_s(double s_offset_hz = 0.0);
SpinSystem sa();
SpinSystem sax();
SpinSystem s2ax();
SpinSystem samx();

/// Gaussian truncated at 1%, calibrated to `flip` (rad).
PulseShape gaussian(double flip, double duration = 2e-3, double truncation = 0.01);

/// sech(5.3 (2t/T - 1)), calibrated to `flip`.
PulseShape sech(double flip, double duration = 2e-3);

/// Rectangular pulse with flip angle `flip` on the x axis.
PulseShape hard(double flip, double duration = 1e-5);

/// Random Fourier envelope (1-6 harmonics) scaled so that I(T) equals
/// `target_abs_integral`.
PulseShape random_fourier(std::mt19937_64& rng, double target_abs_integral);

/// Random SA or SAX system with offsets within +-300 Hz and |J| <= 15 Hz.
SpinSystem random_small_system(std::mt19937_64& rng);

} // namespace magcrit::cases
