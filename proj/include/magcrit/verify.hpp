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

#include <string>
#include <vector>

#include "magcrit/kernels.hpp"

namespace magcrit {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Cross-module invariants on the reference systems: unitarity, Magnus
/// reconstruction, eigenvalue bound, expansion/propagator agreement and so on.
/// Never throws; a check that errors is reported as failed.
std::vector<CheckResult> run_invariant_suite(Execution exec = Execution::parallel);

} // namespace magcrit
