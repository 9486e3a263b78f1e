// Copyright 2026 The szilard Authors
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

#include "szilard/sphere.hpp"

#include <cmath>
#include <numbers>

#include "szilard/error.hpp"

namespace szilard {

std::vector<BlochVec> spiral_sphere_points(std::size_t count) {
    if (count < 3) {
        throw Error(ErrorCode::InvalidParam, "sphere discretization needs at least 3 points");
    }
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    const std::size_t spiral = count - 2;

    std::vector<BlochVec> points;
    points.reserve(count);
    points.emplace_back(0.0, 0.0, 1.0);
    points.emplace_back(0.0, 0.0, -1.0);
    for (std::size_t k = 0; k < spiral; ++k) {
        const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(spiral);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * static_cast<double>(k);
        points.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
    }
    return points;
}

} // namespace szilard
