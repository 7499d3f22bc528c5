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

#include "magcrit/pulse.hpp"

#include <cmath>
#include <utility>

#include "magcrit/errors.hpp"
#include "magcrit/spin_system.hpp"

namespace magcrit {

PulseShape::PulseShape(std::string name, double duration, Envelope amplitude, Envelope phase)
    : name_(std::move(name)), duration_(duration), amplitude_(std::move(amplitude)),
      phase_(std::move(phase)) {
    if (!(duration_ > 0.0) || !std::isfinite(duration_))
        throw InputError("pulse duration must be positive and finite");
    if (!amplitude_)
        throw InputError("pulse needs an amplitude function");
}

PulseShape PulseShape::scaled(double factor) const {
    auto amp = amplitude_;
    return PulseShape(name_, duration_, [amp, factor](double t) { return factor * amp(t); },
                      phase_);
}

PulseShape PulseShape::time_compressed(double factor) const {
    if (!(factor > 0.0))
        throw InputError("compression factor must be positive");
    auto amp = amplitude_;
    auto ph = phase_;
    Envelope new_phase;
    if (ph)
        new_phase = [ph, factor](double t) { return ph(t * factor); };
    return PulseShape(
        name_, duration_ / factor, [amp, factor](double t) { return factor * amp(t * factor); },
        new_phase);
}

namespace {

double param(const ShapeDescriptor& spec, const std::string& key, double fallback) {
    auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : it->second;
}

double required(const ShapeDescriptor& spec, const std::string& key) {
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw InputError("pulse family '" + spec.family + "' requires parameter '" + key + "'");
    return it->second;
}

} // namespace

PulseShape build_pulse(const ShapeDescriptor& spec) {
    const double T = spec.duration;
    if (!(T > 0.0) || !std::isfinite(T))
        throw InputError("pulse duration must be positive and finite");
    const std::string name = spec.name.empty() ? spec.family : spec.name;
    const double scale = param(spec, "amplitude", 1.0);
    if (!std::isfinite(scale))
        throw InputError("pulse amplitude must be finite");

    PulseShape::Envelope phase;
    if (auto it = spec.params.find("phase"); it != spec.params.end() && it->second != 0.0) {
        const double p = it->second;
        phase = [p](double) { return p; };
    }

    const auto& fam = spec.family;
    if (fam == "constant") {
        return PulseShape(name, T, [scale](double) { return scale; }, phase);
    }
    if (fam == "gaussian") {
        const double trunc = required(spec, "truncation");
        if (!(trunc > 0.0 && trunc < 1.0))
            throw InputError("gaussian truncation must lie in (0, 1)");
        const double a = -std::log(trunc);
        return PulseShape(
            name, T,
            [=](double t) {
                const double x = (t - T / 2) / (T / 2);
                return scale * std::exp(-a * x * x);
            },
            phase);
    }
    if (fam == "sech") {
        const double beta = required(spec, "beta");
        if (!(beta > 0.0) || !std::isfinite(beta))
            throw InputError("sech beta must be positive");
        return PulseShape(
            name, T, [=](double t) { return scale / std::cosh(beta * (2 * t / T - 1)); }, phase);
    }
    if (fam == "sinc") {
        const double lobes = required(spec, "lobes");
        if (!(lobes >= 1.0) || lobes != std::floor(lobes))
            throw InputError("sinc lobes must be an integer >= 1");
        const double xmax = kPi * (lobes + 1) / 2;
        return PulseShape(
            name, T,
            [=](double t) {
                const double x = xmax * (2 * t / T - 1);
                return std::abs(x) < 1e-12 ? scale : scale * std::sin(x) / x;
            },
            phase);
    }
    if (fam == "hermite") {
        const double order = required(spec, "order");
        if (!(order >= 0.0) || order != std::floor(order) || order > 64)
            throw InputError("hermite order must be an integer in [0, 64]");
        const double span = param(spec, "span", 3.0);
        if (!(span > 0.0))
            throw InputError("hermite span must be positive");
        const auto n = static_cast<unsigned>(order);
        return PulseShape(
            name, T,
            [=](double t) {
                const double x = span * (2 * t / T - 1);
                return scale * std::hermite(n, x) * std::exp(-x * x / 2);
            },
            phase);
    }
    if (fam == "fourier") {
        if (!spec.fourier)
            throw InputError("fourier family requires fourier coefficients");
        const auto f = *spec.fourier;
        for (double c : f.cos_coeffs)
            if (!std::isfinite(c))
                throw InputError("fourier coefficients must be finite");
        for (double c : f.sin_coeffs)
            if (!std::isfinite(c))
                throw InputError("fourier coefficients must be finite");
        const double s = scale * param(spec, "scale", kTwoPi / T);
        return PulseShape(
            name, T,
            [=](double t) {
                double v = f.a0;
                const double w = kTwoPi * t / T;
                for (std::size_t n = 0; n < f.cos_coeffs.size(); ++n)
                    v += f.cos_coeffs[n] * std::cos(static_cast<double>(n + 1) * w);
                for (std::size_t n = 0; n < f.sin_coeffs.size(); ++n)
                    v += f.sin_coeffs[n] * std::sin(static_cast<double>(n + 1) * w);
                return s * v;
            },
            phase);
    }
    if (fam == "gaussian_cascade") {
        if (!spec.cascade)
            throw InputError("gaussian_cascade family requires amplitudes, centers and fwhm");
        const auto c = *spec.cascade;
        if (c.amplitudes.empty() || c.amplitudes.size() != c.centers.size() ||
            c.amplitudes.size() != c.fwhm.size())
            throw InputError("gaussian_cascade arrays must be non-empty and equally long");
        std::vector<double> sigma;
        for (double w : c.fwhm) {
            if (!(w > 0.0))
                throw InputError("gaussian_cascade widths must be positive");
            sigma.push_back(w / (2.0 * std::sqrt(2.0 * std::log(2.0))));
        }
        return PulseShape(
            name, T,
            [=](double t) {
                const double x = t / T;
                double v = 0.0;
                for (std::size_t n = 0; n < c.amplitudes.size(); ++n) {
                    const double d = (x - c.centers[n]) / sigma[n];
                    v += c.amplitudes[n] * std::exp(-0.5 * d * d);
                }
                return scale * v;
            },
            phase);
    }
    throw InputError("unknown pulse family '" + fam + "'");
}

double flip_angle(const PulseShape& shape, double t, long n_steps) {
    if (!(t >= 0.0 && t <= shape.duration()))
        throw InputError("time lies outside the pulse");
    if (n_steps < 1)
        throw InputError("n_steps must be >= 1");
    if (t == 0.0)
        return 0.0;
    const double dt = t / static_cast<double>(n_steps);
    double sum = 0.0;
    for (long k = 0; k < n_steps; ++k)
        sum += shape.amplitude((static_cast<double>(k) + 0.5) * dt);
    return sum * dt;
}

double abs_amplitude_integral(const PulseShape& shape, double t, long n_steps) {
    if (!(t >= 0.0 && t <= shape.duration()))
        throw InputError("time lies outside the pulse");
    if (n_steps < 1)
        throw InputError("n_steps must be >= 1");
    if (t == 0.0)
        return 0.0;
    const double dt = t / static_cast<double>(n_steps);
    double sum = 0.0;
    for (long k = 0; k < n_steps; ++k)
        sum += std::abs(shape.amplitude((static_cast<double>(k) + 0.5) * dt));
    return sum * dt;
}

PulseShape calibrate(const PulseShape& shape, double target_flip, long n_steps) {
    const double area = flip_angle(shape, shape.duration(), n_steps);
    const double peak = abs_amplitude_integral(shape, shape.duration(), n_steps);
    if (!std::isfinite(area) || std::abs(area) <= 1e-12 * std::max(peak, 1e-300))
        throw InputError("pulse '" + shape.name() +
                         "' has zero net area and cannot be calibrated by scaling");
    return shape.scaled(target_flip / area);
}

SampledPulse sample(const PulseShape& shape, long n_steps) {
    if (n_steps < 1)
        throw InputError("n_steps must be >= 1");
    SampledPulse s;
    const auto n = static_cast<std::size_t>(n_steps);
    s.dt = shape.duration() / static_cast<double>(n_steps);
    s.times.resize(n);
    s.amps.resize(n);
    s.phases.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double t = (static_cast<double>(k) + 0.5) * s.dt;
        s.times[k] = t;
        s.amps[k] = shape.amplitude(t);
        s.phases[k] = shape.phase(t);
        if (!std::isfinite(s.amps[k]) || !std::isfinite(s.phases[k]))
            throw InputError("pulse '" + shape.name() + "' is not finite at t = " +
                             std::to_string(t));
    }
    return s;
}

std::vector<double> cumulative_flip(const SampledPulse& s) {
    std::vector<double> out(s.size() + 1, 0.0);
    double sum = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        sum += s.amps[k];
        out[k + 1] = sum * s.dt;
    }
    return out;
}

std::vector<double> cumulative_abs(const SampledPulse& s) {
    std::vector<double> out(s.size() + 1, 0.0);
    double sum = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        sum += std::abs(s.amps[k]);
        out[k + 1] = sum * s.dt;
    }
    return out;
}

} // namespace magcrit
