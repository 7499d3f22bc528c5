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

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace magcrit {

/// Default number of midpoint panels for quadrature and slicing.
inline constexpr long kDefaultSteps = 4096;

/// Amplitude omega_1(t) (rad/s, may be negative) and phase phi(t) (rad) over [0, T].
class PulseShape {
public:
    using Envelope = std::function<double(double)>;

    PulseShape(std::string name, double duration, Envelope amplitude, Envelope phase = {});

    const std::string& name() const noexcept { return name_; }
    double duration() const noexcept { return duration_; }
    double amplitude(double t) const { return amplitude_(t); }
    double phase(double t) const { return phase_ ? phase_(t) : 0.0; }
    bool has_phase() const noexcept { return static_cast<bool>(phase_); }

    /// Same shape with the amplitude multiplied by `factor`.
    PulseShape scaled(double factor) const;

    /// Same envelope played over duration / factor with amplitude * factor.
    PulseShape time_compressed(double factor) const;

private:
    std::string name_;
    double duration_;
    Envelope amplitude_;
    Envelope phase_;
};

/// omega_1(t) = scale * [a0 + sum_n A_n cos(2 pi n t / T) + B_n sin(2 pi n t / T)].
struct FourierPulseSpec {
    std::string name;
    double nominal_flip = 0.0; ///< rad
    double a0 = 0.0;
    std::vector<double> cos_coeffs;
    std::vector<double> sin_coeffs;
};

/// Sum of Gaussians: amplitudes[n] * exp(-(t/T - centers[n])^2 / (2 sigma_n^2)),
/// sigma_n = fwhm[n] / (2 sqrt(2 ln 2)), centers and widths as fractions of T.
struct CascadeSpec {
    std::vector<double> amplitudes;
    std::vector<double> centers;
    std::vector<double> fwhm;
};

/// Family name plus parameters, as read from a pulse file or CLI flags.
///
/// Families and their parameters:
///   constant          amplitude (rad/s)
///   gaussian          truncation in (0, 1)
///   sech              beta > 0 (envelope sech(beta (2t/T - 1)))
///   sinc              lobes >= 1 (central lobe plus side lobes)
///   hermite           order >= 0, span > 0 (H_n(x) exp(-x^2/2), x in [-span, span])
///   fourier           a0, cos_coeffs, sin_coeffs (scale defaults to 2 pi / T)
///   gaussian_cascade  amplitudes, centers, fwhm
/// Every family also accepts `amplitude` (multiplier, default 1 except as noted)
/// and `phase` (constant phase, rad).
struct ShapeDescriptor {
    std::string name;
    std::string family;
    double duration = 0.0; ///< s
    std::map<std::string, double> params;
    std::optional<FourierPulseSpec> fourier;
    std::optional<CascadeSpec> cascade;
    std::optional<double> nominal_flip; ///< rad
    std::string source;                 ///< provenance note from the data file
};

PulseShape build_pulse(const ShapeDescriptor& spec);

/// Rescales the amplitude so flip_angle(T, n_steps) equals target_flip.
/// Throws InputError when the net area vanishes.
PulseShape calibrate(const PulseShape& shape, double target_flip, long n_steps = kDefaultSteps);

/// theta(t) = int_0^t omega_1, composite midpoint with n_steps panels.
double flip_angle(const PulseShape& shape, double t, long n_steps = kDefaultSteps);

/// I(t) = int_0^t |omega_1|, same quadrature as flip_angle.
double abs_amplitude_integral(const PulseShape& shape, double t, long n_steps = kDefaultSteps);

/// Midpoint samples: times[k] = (k + 1/2) dt.
struct SampledPulse {
    double dt = 0.0;
    std::vector<double> times;
    std::vector<double> amps;
    std::vector<double> phases;

    std::size_t size() const noexcept { return amps.size(); }
};

SampledPulse sample(const PulseShape& shape, long n_steps);

/// Running integrals at grid points t_k = k dt, k = 0..N, from midpoint samples.
std::vector<double> cumulative_flip(const SampledPulse& s);
std::vector<double> cumulative_abs(const SampledPulse& s);

/// Pulse file: { name, family, duration_s, params{...} | fourier{a0, a[], b[]},
/// nominal_flip_deg }.
ShapeDescriptor parse_pulse_descriptor(const std::string& json_text);
ShapeDescriptor load_pulse_descriptor(const std::filesystem::path& path);

/// Builds the shape and, when a flip is known, calibrates to it.
/// `flip_override` (rad) wins over the descriptor's nominal flip.
PulseShape realize_pulse(const ShapeDescriptor& spec, std::optional<double> flip_override = {},
                         long n_steps = kDefaultSteps);

/// Data directory: $MAGCRIT_DATA_DIR if set, else the build-time default.
std::filesystem::path data_directory();

struct CatalogEntry {
    std::filesystem::path path;
    ShapeDescriptor descriptor;
};

/// All pulse files under <data>/pulses, sorted by file name.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& data_dir = data_directory());

} // namespace magcrit
