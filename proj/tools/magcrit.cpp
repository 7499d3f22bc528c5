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

// magcrit: Magnus-solution existence checks for shaped pulses on weakly
// coupled S_n AMX... spin systems.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "magcrit/errors.hpp"
#include "magcrit/expansion.hpp"
#include "magcrit/magnus.hpp"
#include "magcrit/propagation.hpp"
#include "magcrit/pulse.hpp"
#include "magcrit/report.hpp"
#include "magcrit/spin_system.hpp"
#include "magcrit/verify.hpp"

namespace fs = std::filesystem;
using namespace magcrit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitViolated = 3;
constexpr int kExitNumerical = 4;

struct RunConfig {
    std::string command;
    std::string system_path;
    std::string pulse_path;
    std::string shape_family;
    double duration = 2e-3;
    std::optional<double> flip_deg;
    std::optional<double> truncation, beta, lobes, order, span, amplitude, phase_deg;
    long n_steps = kDefaultSteps;
    double tol = 1e-9;
    std::string output;
    std::string format;
    std::string data_dir;
    long stride = 0;
    double offset_min_hz = -1000.0;
    double offset_max_hz = 1000.0;
    long offset_count = 201;
};

void add_pulse_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--system", cfg.system_path, "Spin system JSON file (Hz units)");
    cmd->add_option("--pulse", cfg.pulse_path, "Pulse JSON file or catalog file name");
    cmd->add_option("--shape", cfg.shape_family,
                    "Pulse family: constant, gaussian, sech, sinc, hermite");
    cmd->add_option("--duration", cfg.duration, "Pulse duration in seconds (with --shape)");
    cmd->add_option("--flip", cfg.flip_deg, "Calibrate to this flip angle (degrees)");
    cmd->add_option("--truncation", cfg.truncation, "gaussian: edge level in (0, 1)");
    cmd->add_option("--beta", cfg.beta, "sech: truncation parameter");
    cmd->add_option("--lobes", cfg.lobes, "sinc: lobe count");
    cmd->add_option("--order", cfg.order, "hermite: polynomial order");
    cmd->add_option("--span", cfg.span, "hermite: half-width in units of x");
    cmd->add_option("--amplitude", cfg.amplitude, "Amplitude multiplier (rad/s for constant)");
    cmd->add_option("--phase", cfg.phase_deg, "Constant RF phase (degrees)");
    cmd->add_option("--steps", cfg.n_steps, "Initial number of time slices")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--tol", cfg.tol, "Step-doubling tolerance")->check(CLI::PositiveNumber);
}

void add_output_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("-o,--output", cfg.output, "Output file (default stdout)");
    cmd->add_option("--format", cfg.format, "json or csv (default from extension)")
        ->check(CLI::IsMember({"json", "csv"}));
}

fs::path resolve_data_file(const std::string& given, const fs::path& data_dir) {
    const fs::path p(given);
    if (fs::exists(p))
        return p;
    for (const auto& candidate :
         {data_dir / p, data_dir / "pulses" / p.filename(), data_dir / "pulses" / p,
          data_dir / "systems" / p.filename()}) {
        if (fs::exists(candidate))
            return candidate;
        auto with_ext = candidate;
        with_ext += ".json";
        if (fs::exists(with_ext))
            return with_ext;
    }
    throw InputError("file not found: " + given);
}

struct ResolvedPulse {
    PulseShape shape;
    PulseInfo info;
};

ResolvedPulse resolve_pulse(const RunConfig& cfg, const fs::path& data_dir) {
    ShapeDescriptor d;
    if (!cfg.pulse_path.empty()) {
        if (!cfg.shape_family.empty())
            throw InputError("use either --pulse or --shape, not both");
        d = load_pulse_descriptor(resolve_data_file(cfg.pulse_path, data_dir));
    } else if (!cfg.shape_family.empty()) {
        d.family = cfg.shape_family;
        d.name = cfg.shape_family;
        d.duration = cfg.duration;
        if (cfg.truncation) d.params["truncation"] = *cfg.truncation;
        if (cfg.beta) d.params["beta"] = *cfg.beta;
        if (cfg.lobes) d.params["lobes"] = *cfg.lobes;
        if (cfg.order) d.params["order"] = *cfg.order;
        if (cfg.span) d.params["span"] = *cfg.span;
        if (d.family == "gaussian" && !cfg.truncation) d.params["truncation"] = 0.01;
        if (d.family == "sech" && !cfg.beta) d.params["beta"] = 5.3;
        if (d.family == "sinc" && !cfg.lobes) d.params["lobes"] = 3;
        if (d.family == "hermite" && !cfg.order) d.params["order"] = 2;
    } else {
        throw InputError("a pulse is required: pass --pulse <file> or --shape <family>");
    }
    if (cfg.amplitude) d.params["amplitude"] = *cfg.amplitude;
    if (cfg.phase_deg) d.params["phase"] = *cfg.phase_deg * kPi / 180.0;

    std::optional<double> flip;
    if (cfg.flip_deg)
        flip = *cfg.flip_deg * kPi / 180.0;
    auto shape = realize_pulse(d, flip, cfg.n_steps);
    PulseInfo info{shape.name(), d.family, d.duration,
                   flip_angle(shape, shape.duration(), cfg.n_steps), d.source};
    return {std::move(shape), std::move(info)};
}

SpinSystem resolve_system(const RunConfig& cfg, const fs::path& data_dir) {
    if (cfg.system_path.empty())
        return SpinSystem(1, 0.0, {});
    return load_spin_system(resolve_data_file(cfg.system_path, data_dir));
}

std::string output_format(const RunConfig& cfg, const std::string& fallback) {
    if (!cfg.format.empty())
        return cfg.format;
    const auto ext = fs::path(cfg.output).extension().string();
    if (ext == ".csv")
        return "csv";
    if (ext == ".json")
        return "json";
    return fallback;
}

std::string render(const Table& t, const std::string& format) {
    return format == "csv" ? t.to_csv() : t.to_json().dump(2) + "\n";
}

Table decimate(const Table& t, long stride, std::size_t configs) {
    if (stride <= 1)
        return t;
    Table out;
    out.columns = t.columns;
    const std::size_t block = configs;
    const std::size_t points = t.rows.size() / block;
    for (std::size_t k = 0; k < points; ++k)
        if (k % static_cast<std::size_t>(stride) == 0 || k + 1 == points)
            for (std::size_t i = 0; i < block; ++i)
                out.rows.push_back(t.rows[k * block + i]);
    return out;
}

long auto_stride(const RunConfig& cfg, long used_steps) {
    if (cfg.stride > 0)
        return cfg.stride;
    return std::max(1L, used_steps / cfg.n_steps);
}

int cmd_catalog(const RunConfig& cfg, const fs::path& data_dir) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    Table table;
    table.columns = {"nominal_flip_deg", "duration_s", "I_T", "theta_T", "criterion23"};
    std::vector<std::string> names;
    for (const auto& e : load_catalog(data_dir)) {
        const auto shape = realize_pulse(e.descriptor, {}, cfg.n_steps);
        const double I = abs_amplitude_integral(shape, shape.duration(), cfg.n_steps);
        const double theta = flip_angle(shape, shape.duration(), cfg.n_steps);
        const double nominal = e.descriptor.nominal_flip.value_or(theta) * 180.0 / kPi;
        nlohmann::ordered_json j;
        j["name"] = e.descriptor.name;
        j["family"] = e.descriptor.family;
        j["file"] = e.path.filename().string();
        j["nominal_flip_deg"] = round_sig(nominal);
        j["duration_s"] = round_sig(e.descriptor.duration);
        j["I_T"] = round_sig(I);
        j["theta_T"] = round_sig(theta);
        j["criterion23"] = I < kTwoPi;
        if (!e.descriptor.source.empty())
            j["source"] = e.descriptor.source;
        arr.push_back(std::move(j));
        names.push_back(e.descriptor.name);
        table.rows.push_back({nominal, e.descriptor.duration, I, theta, I < kTwoPi ? 1.0 : 0.0});
    }
    if (output_format(cfg, "json") == "csv") {
        std::string csv = "name," + table.to_csv();
        // Prefix each data row with the pulse name.
        std::string out;
        std::size_t row = 0, pos = 0;
        while (pos < csv.size()) {
            auto end = csv.find('\n', pos);
            std::string line = csv.substr(pos, end - pos);
            out += (row == 0 ? line : names[row - 1] + "," + line) + "\n";
            ++row;
            pos = end + 1;
        }
        write_output(cfg.output, out);
    } else {
        write_output(cfg.output, arr.dump(2) + "\n");
    }
    return kExitOk;
}

int cmd_criterion(const RunConfig& cfg, const fs::path& data_dir) {
    const auto system = resolve_system(cfg, data_dir);
    const auto pulse = resolve_pulse(cfg, data_dir);
    CriterionOptions opt;
    opt.n_steps = cfg.n_steps;
    opt.tol = cfg.tol;
    const auto report = explicit_criterion(system, pulse.shape, opt);
    const auto j = criterion_json(report, pulse.info, system, opt);
    if (output_format(cfg, "json") == "csv") {
        Table t;
        t.columns = {"I_T",       "theta_T",            "criterion23",  "criterion25",
                     "max_omega_hat", "magnus_gap_nearest", "magnus_ok", "bound21_margin"};
        t.rows.push_back({report.I_T, report.theta_T, report.criterion23_met ? 1.0 : 0.0,
                          report.criterion25_met ? 1.0 : 0.0, report.max_omega_hat,
                          report.magnus_gap_nearest, report.magnus_ok ? 1.0 : 0.0,
                          report.bound21_margin});
        write_output(cfg.output, t.to_csv());
    } else {
        write_output(cfg.output, j.dump(2) + "\n");
    }
    return report.criterion23_met ? kExitOk : kExitViolated;
}

int cmd_propagate(const RunConfig& cfg, const fs::path& data_dir) {
    const auto system = resolve_system(cfg, data_dir);
    const auto pulse = resolve_pulse(cfg, data_dir);
    PropagationOptions opt;
    opt.n_steps = cfg.n_steps;
    opt.tol = cfg.tol;
    const auto tr = propagate_interaction(system, pulse.shape, opt);
    const auto table = decimate(trajectory_table(tr), auto_stride(cfg, tr.n_steps),
                                tr.config_count());
    write_output(cfg.output, render(table, output_format(cfg, "csv")));
    return kExitOk;
}

int cmd_profile(const RunConfig& cfg, const fs::path& data_dir) {
    const auto system = resolve_system(cfg, data_dir);
    const auto pulse = resolve_pulse(cfg, data_dir);
    if (cfg.offset_count < 1)
        throw InputError("--offset-count must be >= 1");
    std::vector<double> offsets;
    for (long k = 0; k < cfg.offset_count; ++k) {
        const double f = cfg.offset_count == 1
                             ? cfg.offset_min_hz
                             : cfg.offset_min_hz + (cfg.offset_max_hz - cfg.offset_min_hz) *
                                                       static_cast<double>(k) /
                                                       static_cast<double>(cfg.offset_count - 1);
        offsets.push_back(hz_to_rad(f));
    }
    const auto profile = excitation_profile(system, pulse.shape, offsets, cfg.n_steps);
    write_output(cfg.output, render(profile_table(profile), output_format(cfg, "csv")));
    return kExitOk;
}

int cmd_decompose(const RunConfig& cfg, const fs::path& data_dir) {
    const auto system = resolve_system(cfg, data_dir);
    const auto pulse = resolve_pulse(cfg, data_dir);
    ExpansionOptions opt;
    opt.n_steps = cfg.n_steps;
    opt.tol = cfg.tol;
    const auto state = integrate_expansion(system, pulse.shape, opt);
    // decomposition_table is config-major; regroup to time-major before decimating.
    const Table t = decomposition_table(state);
    Table time_major;
    time_major.columns = t.columns;
    const std::size_t points = state.point_count();
    const std::size_t configs = state.config_count();
    for (std::size_t k = 0; k < points; ++k)
        for (std::size_t i = 0; i < configs; ++i)
            time_major.rows.push_back(t.rows[i * points + k]);
    write_output(cfg.output,
                 render(decimate(time_major, auto_stride(cfg, state.n_steps), configs),
                        output_format(cfg, "csv")));
    return kExitOk;
}

int cmd_verify(const RunConfig&) {
    const auto results = run_invariant_suite();
    int failed = 0;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  (" << r.detail << ")\n";
        if (!r.passed)
            ++failed;
    }
    std::cout << results.size() - static_cast<std::size_t>(failed) << " passed, " << failed
              << " failed\n";
    return failed == 0 ? kExitOk : kExitNumerical;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Magnus-solution existence criterion for shaped pulses on weakly coupled "
                 "spin systems"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);
    app.fallthrough();
    app.footer("Environment: MAGCRIT_DATA_DIR overrides the bundled data directory.\n"
               "Exit codes: 0 ok, 2 bad input, 3 criterion violated, 4 numerical failure.");
    RunConfig cfg;
    app.add_option("--data-dir", cfg.data_dir,
                   "Data directory (default: $MAGCRIT_DATA_DIR or the bundled data)");

    auto* catalog = app.add_subcommand("catalog", "List bundled pulses with their integrals");
    add_output_options(catalog, cfg);
    catalog->add_option("--steps", cfg.n_steps, "Quadrature panels")->check(CLI::PositiveNumber);

    auto* criterion = app.add_subcommand(
        "criterion", "Evaluate I(T) < 2 pi and audit the Magnus solution (exit 3 if violated)");
    add_pulse_options(criterion, cfg);
    add_output_options(criterion, cfg);

    auto* propagate =
        app.add_subcommand("propagate", "Interaction-frame propagator blocks over time");
    add_pulse_options(propagate, cfg);
    add_output_options(propagate, cfg);
    propagate->add_option("--stride", cfg.stride, "Emit every k-th grid point (0 = auto)");

    auto* profile = app.add_subcommand("profile", "Excitation profile over S offsets");
    add_pulse_options(profile, cfg);
    add_output_options(profile, cfg);
    profile->add_option("--offset-min", cfg.offset_min_hz, "Lowest S offset (Hz)");
    profile->add_option("--offset-max", cfg.offset_max_hz, "Highest S offset (Hz)");
    profile->add_option("--offset-count", cfg.offset_count, "Number of offsets");

    auto* decompose = app.add_subcommand(
        "decompose", "Expansion-form coefficients f, g and the angles alpha, beta, Omega");
    add_pulse_options(decompose, cfg);
    add_output_options(decompose, cfg);
    decompose->add_option("--stride", cfg.stride, "Emit every k-th grid point (0 = auto)");

    auto* verify = app.add_subcommand("verify", "Run the cross-module invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        const fs::path data_dir = cfg.data_dir.empty() ? data_directory() : fs::path(cfg.data_dir);
        if (catalog->parsed()) return cmd_catalog(cfg, data_dir);
        if (criterion->parsed()) return cmd_criterion(cfg, data_dir);
        if (propagate->parsed()) return cmd_propagate(cfg, data_dir);
        if (profile->parsed()) return cmd_profile(cfg, data_dir);
        if (decompose->parsed()) return cmd_decompose(cfg, data_dir);
        if (verify->parsed()) return cmd_verify(cfg);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitBadInput;
}
