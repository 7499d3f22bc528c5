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

#include "magcrit/spin_system.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "magcrit/errors.hpp"

namespace magcrit {

SpinSystem SpinSystem::from_hz(int s_count, double s_offset_hz,
                               const std::vector<ISpinHz>& i_spins,
                               const std::vector<CouplingHz>& j_ii) {
    std::vector<ISpin> spins;
    spins.reserve(i_spins.size());
    for (const auto& s : i_spins)
        spins.push_back({hz_to_rad(s.offset_hz), hz_to_rad(s.j_to_s_hz)});

    CouplingMap couplings;
    for (const auto& c : j_ii) {
        auto key = std::minmax(c.k, c.l);
        if (couplings.count(key))
            throw InputError("duplicate I-I coupling (" + std::to_string(c.k) + ", " +
                             std::to_string(c.l) + ")");
        couplings[key] = hz_to_rad(c.j_hz);
    }
    return SpinSystem(s_count, hz_to_rad(s_offset_hz), std::move(spins), std::move(couplings));
}

SpinSystem::SpinSystem(int s_count, double s_offset, std::vector<ISpin> i_spins,
                       CouplingMap j_ii)
    : s_count_(s_count), s_offset_(s_offset), i_spins_(std::move(i_spins)),
      j_ii_(std::move(j_ii)) {
    if (s_count_ < 1)
        throw InputError("s_count must be >= 1");
    if (!std::isfinite(s_offset_))
        throw InputError("s_offset must be finite");
    if (i_spins_.size() > 20)
        throw InputError("at most 20 I spins are supported");
    for (const auto& s : i_spins_)
        if (!std::isfinite(s.offset) || !std::isfinite(s.j_to_s))
            throw InputError("I-spin parameters must be finite");
    for (const auto& [key, value] : j_ii_) {
        if (key.first >= key.second)
            throw InputError("I-I coupling must reference two distinct spins with k < l");
        if (key.second >= i_spins_.size())
            throw InputError("I-I coupling references a nonexistent I spin");
        if (!std::isfinite(value))
            throw InputError("I-I coupling must be finite");
    }
}

SpinSystem SpinSystem::with_s_offset(double s_offset) const {
    return SpinSystem(s_count_, s_offset, i_spins_, j_ii_);
}

SpinSystem SpinSystem::with_s_count(int s_count) const {
    return SpinSystem(s_count, s_offset_, i_spins_, j_ii_);
}

IConfiguration configuration_at(const SpinSystem& system, std::size_t index) {
    const std::size_t n = system.i_count();
    if (index >= system.config_count())
        throw InputError("configuration index out of range");
    IConfiguration c;
    c.index = index;
    c.m.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const bool down = (index >> (n - 1 - k)) & 1u;
        c.m[k] = down ? -0.5 : 0.5;
    }
    return c;
}

std::vector<IConfiguration> enumerate_configurations(const SpinSystem& system) {
    std::vector<IConfiguration> out;
    out.reserve(system.config_count());
    for (std::size_t i = 0; i < system.config_count(); ++i)
        out.push_back(configuration_at(system, i));
    return out;
}

LomsoDiagonal LomsoDiagonal::operator+(const LomsoDiagonal& other) const {
    if (other.size() != size())
        throw InputError("LOMSO diagonal size mismatch");
    std::vector<double> v(values_);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] += other.values_[i];
    return LomsoDiagonal(std::move(v));
}

LomsoDiagonal LomsoDiagonal::operator*(const LomsoDiagonal& other) const {
    if (other.size() != size())
        throw InputError("LOMSO diagonal size mismatch");
    std::vector<double> v(values_);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] *= other.values_[i];
    return LomsoDiagonal(std::move(v));
}

LomsoDiagonal LomsoDiagonal::operator*(double scale) const {
    std::vector<double> v(values_);
    for (auto& x : v)
        x *= scale;
    return LomsoDiagonal(std::move(v));
}

namespace {

void check_config(const SpinSystem& system, const IConfiguration& config) {
    if (config.m.size() != system.i_count() || config.index >= system.config_count())
        throw InputError("configuration does not belong to this spin system");
}

} // namespace

double effective_s_offset(const SpinSystem& system, const IConfiguration& config) {
    check_config(system, config);
    double w = system.s_offset();
    for (std::size_t k = 0; k < system.i_count(); ++k)
        w += system.i_spins()[k].j_to_s * config.m[k];
    return w;
}

double i_spin_energy(const SpinSystem& system, const IConfiguration& config) {
    check_config(system, config);
    double e = 0.0;
    for (std::size_t k = 0; k < system.i_count(); ++k)
        e += system.i_spins()[k].offset * config.m[k];
    for (const auto& [key, j] : system.j_ii())
        e += j * config.m[key.first] * config.m[key.second];
    return e;
}

LomsoDiagonal effective_s_offsets(const SpinSystem& system) {
    std::vector<double> v;
    v.reserve(system.config_count());
    for (const auto& c : enumerate_configurations(system))
        v.push_back(effective_s_offset(system, c));
    return LomsoDiagonal(std::move(v));
}

LomsoDiagonal i_spin_energies(const SpinSystem& system) {
    std::vector<double> v;
    v.reserve(system.config_count());
    for (const auto& c : enumerate_configurations(system))
        v.push_back(i_spin_energy(system, c));
    return LomsoDiagonal(std::move(v));
}

Eigen::MatrixXcd assemble_full_matrix(const SpinSystem& system,
                                      const std::vector<Eigen::Matrix2cd>& per_config_blocks) {
    const std::size_t n_cfg = system.config_count();
    if (per_config_blocks.size() != n_cfg)
        throw InputError("expected " + std::to_string(n_cfg) + " configuration blocks, got " +
                         std::to_string(per_config_blocks.size()));

    const int n_s = system.s_count();
    const std::size_t s_dim = std::size_t{1} << n_s;
    const std::size_t dim = s_dim * n_cfg;
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                   static_cast<Eigen::Index>(dim));

    for (std::size_t cfg = 0; cfg < n_cfg; ++cfg) {
        const auto& b = per_config_blocks[cfg];
        // n-fold Kronecker power on the S subspace of this configuration.
        for (std::size_t r = 0; r < s_dim; ++r) {
            for (std::size_t c = 0; c < s_dim; ++c) {
                std::complex<double> v{1.0, 0.0};
                for (int k = 0; k < n_s; ++k) {
                    const int shift = n_s - 1 - k;
                    v *= b((r >> shift) & 1u, (c >> shift) & 1u);
                }
                full(static_cast<Eigen::Index>(r * n_cfg + cfg),
                     static_cast<Eigen::Index>(c * n_cfg + cfg)) = v;
            }
        }
    }
    return full;
}

SpinSystem parse_spin_system(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("spin system file is not valid JSON: ") + e.what());
    }
    try {
        const int s_count = j.value("s_count", 1);
        const double s_offset_hz = j.value("s_offset_hz", 0.0);
        std::vector<SpinSystem::ISpinHz> spins;
        if (j.contains("i_spins"))
            for (const auto& s : j.at("i_spins"))
                spins.push_back({s.value("offset_hz", 0.0), s.value("j_to_s_hz", 0.0)});
        std::vector<SpinSystem::CouplingHz> couplings;
        if (j.contains("j_ii_hz"))
            for (const auto& c : j.at("j_ii_hz")) {
                if (!c.is_array() || c.size() != 3)
                    throw InputError("j_ii_hz entries must be [k, l, value]");
                const auto k = c[0].get<long>();
                const auto l = c[1].get<long>();
                if (k < 0 || l < 0)
                    throw InputError("j_ii_hz indices must be non-negative");
                couplings.push_back({static_cast<std::size_t>(k), static_cast<std::size_t>(l),
                                     c[2].get<double>()});
            }
        return SpinSystem::from_hz(s_count, s_offset_hz, spins, couplings);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed spin system file: ") + e.what());
    }
}

SpinSystem load_spin_system(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open spin system file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spin_system(ss.str());
}

} // namespace magcrit
