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

#include "magcrit/standard_cases.hpp"

namespace magcrit::cases {

SpinSystem isolated_s(double s_offset_hz) { return SpinSystem::from_hz(1, s_offset_hz, {}); }

SpinSystem sa() { return SpinSystem::from_hz(1, 30.0, {{150.0, 7.0}}); }

SpinSystem sax() {
    return SpinSystem::from_hz(1, 30.0, {{150.0, 7.0}, {-220.0, 12.0}}, {{0, 1, 3.0}});
}

SpinSystem s2ax() { return sax().with_s_count(2); }

SpinSystem samx() {
    return SpinSystem::from_hz(1, 30.0, {{150.0, 7.0}, {60.0, -4.0}, {-220.0, 12.0}},
                               {{0, 1, 16.0}, {0, 2, 3.0}, {1, 2, 1.5}});
}

PulseShape gaussian(double flip, double duration, double truncation) {
    ShapeDescriptor d;
    d.name = "gaussian";
    d.family = "gaussian";
    d.duration = duration;
    d.params["truncation"] = truncation;
    return calibrate(build_pulse(d), flip);
}

PulseShape sech(double flip, double duration) {
    ShapeDescriptor d;
    d.name = "sech";
    d.family = "sech";
    d.duration = duration;
    d.params["beta"] = 5.3;
    return calibrate(build_pulse(d), flip);
}

PulseShape hard(double flip, double duration) {
    ShapeDescriptor d;
    d.name = "hard";
    d.family = "constant";
    d.duration = duration;
    d.params["amplitude"] = flip / duration;
    return build_pulse(d);
}

PulseShape random_fourier(std::mt19937_64& rng, double target_abs_integral) {
    std::uniform_real_distribution<double> coeff(-0.4, 0.4);
    std::uniform_real_distribution<double> a0(0.05, 0.3);
    std::uniform_real_distribution<double> dur(1e-3, 3e-3);
    std::uniform_int_distribution<int> harmonics(1, 6);

    FourierPulseSpec f;
    f.name = "random_fourier";
    f.a0 = a0(rng);
    const int n = harmonics(rng);
    for (int k = 0; k < n; ++k) {
        f.cos_coeffs.push_back(coeff(rng));
        f.sin_coeffs.push_back(coeff(rng));
    }
    ShapeDescriptor d;
    d.name = f.name;
    d.family = "fourier";
    d.duration = dur(rng);
    d.fourier = f;
    const auto shape = build_pulse(d);
    return shape.scaled(target_abs_integral / abs_amplitude_integral(shape, shape.duration()));
}

SpinSystem random_small_system(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> offset(-300.0, 300.0);
    std::uniform_real_distribution<double> j(-15.0, 15.0);
    std::bernoulli_distribution two(0.5);
    std::vector<SpinSystem::ISpinHz> spins{{offset(rng), j(rng)}};
    std::vector<SpinSystem::CouplingHz> couplings;
    if (two(rng)) {
        spins.push_back({offset(rng), j(rng)});
        couplings.push_back({0, 1, j(rng)});
    }
    return SpinSystem::from_hz(1, offset(rng), spins, couplings);
}

} // namespace magcrit::cases
