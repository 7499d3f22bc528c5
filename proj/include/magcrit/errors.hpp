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

#include <stdexcept>
#include <string>

namespace magcrit {

/// Malformed or out-of-range user input (files, parameters, indices).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure could not produce a trustworthy result.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Step refinement hit its ceiling before the requested tolerance was met.
/// Carries the last achieved step-halving estimate and the step count it
/// was obtained at.
class ConvergenceError : public NumericalError {
public:
    ConvergenceError(const std::string& what, double best_estimate, long steps)
        : NumericalError(what), best_estimate_(best_estimate), steps_(steps) {}

    double best_estimate() const noexcept { return best_estimate_; }
    long steps() const noexcept { return steps_; }

private:
    double best_estimate_;
    long steps_;
};

} // namespace magcrit
