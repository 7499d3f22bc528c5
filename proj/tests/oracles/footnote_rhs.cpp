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


#include "oracles.hpp"

namespace oracle {

magcrit::ExpansionDerivative footnote_rhs(const magcrit::ExpansionPoint& y,
                                          const magcrit::Vec3& h, double amp) {
    magcrit::Vec3 cross = h.cross(y.g);
    cross.x() = -cross.x();
    return {-amp * h.dot(y.g), 0.5 * amp * (y.f * h + cross)};
}

} // namespace oracle
