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
#include <string>
#include <vector>

#include <json.hpp>

#include "magcrit/expansion.hpp"
#include "magcrit/magnus.hpp"
#include "magcrit/propagation.hpp"
#include "magcrit/pulse.hpp"
#include "magcrit/spin_system.hpp"

namespace magcrit {

std::string tool_version();

/// Significant digits used for every number in emitted reports.
inline constexpr int kReportDigits = 12;

/// x rounded to kReportDigits significant digits (the value "%.12g" prints).
double round_sig(double x);
std::string format_number(double x);

/// Column-oriented numeric table rendered identically as CSV or JSON records.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::string to_csv() const;
    nlohmann::ordered_json to_json() const;
};

Table trajectory_table(const BlockTrajectory& trajectory);
Table profile_table(const std::vector<ProfilePoint>& profile);
Table decomposition_table(const ExpansionState& state);

nlohmann::ordered_json system_json(const SpinSystem& system);

/// Resolved pulse description embedded in reports.
struct PulseInfo {
    std::string name;
    std::string family;
    double duration = 0.0;
    double flip = 0.0; ///< rad, the calibrated/measured net flip
    std::string source;
};

nlohmann::ordered_json criterion_json(const CriterionReport& report, const PulseInfo& pulse,
                                      const SpinSystem& system, const CriterionOptions& options);

/// Writes via a temporary file and rename; "-" or empty means stdout.
void write_output(const std::filesystem::path& path, const std::string& content);

} // namespace magcrit
