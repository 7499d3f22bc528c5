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

#include <cstddef>
#include <filesystem>
#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace magcrit {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kPi = 3.141592653589793238462643383279;

inline double hz_to_rad(double hz) { return kTwoPi * hz; }

/// One passive spin of the AMX... group.
struct ISpin {
    double offset;   ///< rad/s
    double j_to_s;   ///< rad/s (2*pi*J_ks)
};

/// Weakly coupled S_n AMX... system in the rotating frame of the S spins.
///
/// All frequencies are stored in rad/s. Use from_hz() to build a system from
/// Hz values; the 2*pi factor is applied there and nowhere else.
class SpinSystem {
public:
    /// Couplings between I spins, keyed by (k, l) with k < l.
    using CouplingMap = std::map<std::pair<std::size_t, std::size_t>, double>;

    struct ISpinHz {
        double offset_hz;
        double j_to_s_hz;
    };
    struct CouplingHz {
        std::size_t k;
        std::size_t l;
        double j_hz;
    };

    static SpinSystem from_hz(int s_count, double s_offset_hz,
                              const std::vector<ISpinHz>& i_spins,
                              const std::vector<CouplingHz>& j_ii = {});

    /// Angular-frequency constructor; validates indices.
    SpinSystem(int s_count, double s_offset, std::vector<ISpin> i_spins,
               CouplingMap j_ii = {});

    int s_count() const noexcept { return s_count_; }
    double s_offset() const noexcept { return s_offset_; }
    const std::vector<ISpin>& i_spins() const noexcept { return i_spins_; }
    const CouplingMap& j_ii() const noexcept { return j_ii_; }
    std::size_t i_count() const noexcept { return i_spins_.size(); }

    /// 2^{N_I}
    std::size_t config_count() const noexcept { return std::size_t{1} << i_spins_.size(); }

    /// Same couplings and I spins with a different S offset (rad/s).
    SpinSystem with_s_offset(double s_offset) const;

    /// Same system with a different number of equivalent S spins.
    SpinSystem with_s_count(int s_count) const;

private:
    int s_count_;
    double s_offset_;
    std::vector<ISpin> i_spins_;
    CouplingMap j_ii_;
};

/// Joint assignment of m = +-1/2 to every I spin.
///
/// The index is big-endian over declaration order with m = +1/2 encoded as
/// bit 0, so index 0 is all-up and spin 0 is the most significant bit.
struct IConfiguration {
    std::size_t index = 0;
    std::vector<double> m;

    bool operator==(const IConfiguration&) const = default;
};

IConfiguration configuration_at(const SpinSystem& system, std::size_t index);
std::vector<IConfiguration> enumerate_configurations(const SpinSystem& system);

/// Diagonal of an operator in the longitudinal magnetization / spin order
/// subspace of the I spins, indexed by configuration. Elementwise algebra.
class LomsoDiagonal {
public:
    LomsoDiagonal() = default;
    explicit LomsoDiagonal(std::vector<double> values) : values_(std::move(values)) {}
    LomsoDiagonal(std::size_t n, double fill) : values_(n, fill) {}

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const noexcept { return values_; }

    LomsoDiagonal operator+(const LomsoDiagonal& other) const;
    LomsoDiagonal operator*(const LomsoDiagonal& other) const;
    LomsoDiagonal operator*(double scale) const;

    bool operator==(const LomsoDiagonal&) const = default;

private:
    std::vector<double> values_;
};

/// Eigenvalue of Omega_I = Omega_s + sum_k 2 pi J_ks I_kz for this configuration.
double effective_s_offset(const SpinSystem& system, const IConfiguration& config);

/// Eigenvalue of H_I = sum_k Omega_k I_kz + sum_{k<l} 2 pi J_kl I_kz I_lz.
double i_spin_energy(const SpinSystem& system, const IConfiguration& config);

LomsoDiagonal effective_s_offsets(const SpinSystem& system);
LomsoDiagonal i_spin_energies(const SpinSystem& system);

/// Full-space matrix from one 2x2 S block per configuration.
///
/// Basis ordering: S spins slowest (S_1 most significant), then I spins in
/// declaration order, all big-endian with m = +1/2 as bit 0. With n S spins
/// each configuration contributes the n-fold Kronecker power of its block.
/// Throws InputError if the block count does not match the configurations.
Eigen::MatrixXcd assemble_full_matrix(const SpinSystem& system,
                                      const std::vector<Eigen::Matrix2cd>& per_config_blocks);

/// Reads the JSON system file (frequencies in Hz).
SpinSystem load_spin_system(const std::filesystem::path& path);
SpinSystem parse_spin_system(const std::string& json_text);

} // namespace magcrit
