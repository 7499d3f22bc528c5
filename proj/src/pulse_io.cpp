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

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "magcrit/errors.hpp"
#include "magcrit/pulse.hpp"
#include "magcrit/spin_system.hpp"

namespace magcrit {

namespace {

std::vector<double> number_array(const nlohmann::json& j, const char* key) {
    if (!j.contains(key))
        return {};
    const auto& a = j.at(key);
    if (!a.is_array())
        throw InputError(std::string("'") + key + "' must be an array of numbers");
    std::vector<double> out;
    for (const auto& v : a) {
        if (!v.is_number())
            throw InputError(std::string("'") + key + "' must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

} // namespace

ShapeDescriptor parse_pulse_descriptor(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("pulse file is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw InputError("pulse file must hold a JSON object");

    ShapeDescriptor d;
    try {
        d.name = j.value("name", std::string{});
        d.family = j.at("family").get<std::string>();
        d.duration = j.at("duration_s").get<double>();
        d.source = j.value("source", std::string{});
        if (j.contains("nominal_flip_deg"))
            d.nominal_flip = j.at("nominal_flip_deg").get<double>() * kPi / 180.0;

        if (j.contains("params")) {
            const auto& p = j.at("params");
            if (!p.is_object())
                throw InputError("'params' must be an object");
            for (const auto& [key, value] : p.items()) {
                if (value.is_number()) {
                    if (key == "phase_deg")
                        d.params["phase"] = value.get<double>() * kPi / 180.0;
                    else
                        d.params[key] = value.get<double>();
                }
            }
            if (d.family == "gaussian_cascade")
                d.cascade = CascadeSpec{number_array(p, "amplitudes"), number_array(p, "centers"),
                                        number_array(p, "fwhm")};
        }
        if (j.contains("fourier")) {
            const auto& f = j.at("fourier");
            FourierPulseSpec spec;
            spec.name = d.name;
            spec.nominal_flip = d.nominal_flip.value_or(0.0);
            spec.a0 = f.value("a0", 0.0);
            spec.cos_coeffs = number_array(f, "a");
            spec.sin_coeffs = number_array(f, "b");
            d.fourier = std::move(spec);
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed pulse file: ") + e.what());
    }
    return d;
}

ShapeDescriptor load_pulse_descriptor(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open pulse file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    auto d = parse_pulse_descriptor(ss.str());
    if (d.name.empty())
        d.name = path.stem().string();
    return d;
}

PulseShape realize_pulse(const ShapeDescriptor& spec, std::optional<double> flip_override,
                         long n_steps) {
    auto shape = build_pulse(spec);
    if (flip_override)
        return calibrate(shape, *flip_override, n_steps);
    if (spec.nominal_flip)
        return calibrate(shape, *spec.nominal_flip, n_steps);
    return shape;
}

std::filesystem::path data_directory() {
    if (const char* env = std::getenv("MAGCRIT_DATA_DIR"); env && *env)
        return env;
#ifdef MAGCRIT_DEFAULT_DATA_DIR
    return MAGCRIT_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& data_dir) {
    const auto dir = data_dir / "pulses";
    if (!std::filesystem::is_directory(dir))
        throw InputError("pulse catalog directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<CatalogEntry> out;
    for (const auto& f : files)
        out.push_back({f, load_pulse_descriptor(f)});
    return out;
}

} // namespace magcrit
