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

#include "magcrit/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "magcrit/errors.hpp"

#ifndef MAGCRIT_VERSION
#define MAGCRIT_VERSION "0.0.0"
#endif

namespace magcrit {

std::string tool_version() { return MAGCRIT_VERSION; }

std::string format_number(double x) {
    if (!std::isfinite(x))
        return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", kReportDigits, x);
    return buf;
}

double round_sig(double x) {
    if (!std::isfinite(x))
        return x;
    return std::strtod(format_number(x).c_str(), nullptr);
}

namespace {

nlohmann::ordered_json number(double x) {
    if (!std::isfinite(x))
        return nullptr;
    return round_sig(x);
}

} // namespace

std::string Table::to_csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (c)
            out += ',';
        out += columns[c];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                out += ',';
            out += format_number(row[c]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json Table::to_json() const {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json rec;
        for (std::size_t c = 0; c < columns.size(); ++c)
            rec[columns[c]] = number(row[c]);
        arr.push_back(std::move(rec));
    }
    return arr;
}

Table trajectory_table(const BlockTrajectory& trajectory) {
    Table t;
    t.columns = {"t",     "config_index", "u00_re", "u00_im", "u01_re",
                 "u01_im", "u10_re",      "u10_im", "u11_re", "u11_im"};
    for (std::size_t k = 0; k < trajectory.point_count(); ++k) {
        for (std::size_t i = 0; i < trajectory.config_count(); ++i) {
            const auto& u = trajectory.blocks[i][k];
            t.rows.push_back({trajectory.time(k), static_cast<double>(i), u(0, 0).real(),
                              u(0, 0).imag(), u(0, 1).real(), u(0, 1).imag(), u(1, 0).real(),
                              u(1, 0).imag(), u(1, 1).real(), u(1, 1).imag()});
        }
    }
    return t;
}

Table profile_table(const std::vector<ProfilePoint>& profile) {
    Table t;
    t.columns = {"offset_hz", "mx", "my", "mz"};
    for (const auto& p : profile)
        t.rows.push_back({p.offset / kTwoPi, p.mx, p.my, p.mz});
    return t;
}

Table decomposition_table(const ExpansionState& state) {
    Table t;
    t.columns = {"t",     "config_index", "f",    "g_x",       "g_y",
                 "g_z",   "alpha",        "beta", "omega_hat", "constraint_residual"};
    for (std::size_t i = 0; i < state.config_count(); ++i) {
        const auto angles = angles_from_state(state.points[i]);
        for (std::size_t k = 0; k < state.point_count(); ++k) {
            const auto& p = state.points[i][k];
            t.rows.push_back({state.time(k), static_cast<double>(i), p.f, p.g.x(), p.g.y(),
                              p.g.z(), angles[k].alpha, angles[k].beta, angles[k].omega_hat,
                              p.constraint_residual()});
        }
    }
    return t;
}

nlohmann::ordered_json system_json(const SpinSystem& system) {
    nlohmann::ordered_json j;
    j["s_count"] = system.s_count();
    j["s_offset_hz"] = number(system.s_offset() / kTwoPi);
    auto spins = nlohmann::ordered_json::array();
    for (const auto& s : system.i_spins()) {
        nlohmann::ordered_json e;
        e["offset_hz"] = number(s.offset / kTwoPi);
        e["j_to_s_hz"] = number(s.j_to_s / kTwoPi);
        spins.push_back(std::move(e));
    }
    j["i_spins"] = std::move(spins);
    auto couplings = nlohmann::ordered_json::array();
    for (const auto& [key, value] : system.j_ii())
        couplings.push_back({key.first, key.second, number(value / kTwoPi)});
    j["j_ii_hz"] = std::move(couplings);
    return j;
}

nlohmann::ordered_json criterion_json(const CriterionReport& r, const PulseInfo& pulse,
                                      const SpinSystem& system, const CriterionOptions& options) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json p;
    p["name"] = pulse.name;
    p["family"] = pulse.family;
    p["duration_s"] = number(pulse.duration);
    p["flip_deg"] = number(pulse.flip * 180.0 / kPi);
    if (!pulse.source.empty())
        p["source"] = pulse.source;
    j["pulse"] = std::move(p);
    j["system"] = system_json(system);
    j["I_T"] = number(r.I_T);
    j["theta_T"] = number(r.theta_T);
    j["criterion23"] = r.criterion23_met;
    j["criterion25"] = r.criterion25_met;
    j["max_omega_hat"] = number(r.max_omega_hat);
    j["magnus_gap_nearest"] = number(r.magnus_gap_nearest);
    j["magnus_ok"] = r.magnus_ok;
    j["bound21_margin"] = number(r.bound21_margin);
    auto times = nlohmann::ordered_json::array();
    for (double t : r.ambiguity_times)
        times.push_back(number(t));
    j["ambiguity_times"] = std::move(times);
    j["max_gap"] = number(r.max_gap);
    j["bound22_margin"] = number(r.bound22_margin);
    j["n_steps_used"] = r.n_steps;
    j["propagation_error"] = number(r.propagation_error);
    nlohmann::ordered_json cfg;
    cfg["n_steps"] = options.n_steps;
    cfg["tol"] = number(options.tol);
    cfg["gap_tolerance"] = number(options.gap_tolerance);
    j["config"] = std::move(cfg);
    j["version"] = tool_version();
    return j;
}

void write_output(const std::filesystem::path& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw InputError("cannot write " + tmp.string());
        out << content;
        if (!out)
            throw InputError("failed writing " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw InputError("cannot move output into place: " + ec.message());
}

} // namespace magcrit
