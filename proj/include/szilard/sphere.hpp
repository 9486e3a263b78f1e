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

#pragma once

#include <cstddef>
#include <vector>

#include "szilard/qmath.hpp"

namespace szilard {

/// Deterministic near-uniform unit vectors: both poles followed by a
/// golden-angle (Fibonacci) spiral of `count - 2` points with
/// z_k = 1 - (2k + 1) / (count - 2). Requires count >= 3.
///
/// The poles are included explicitly so that (0, 0, +-1) and every point on
/// the z axis between them lie in the convex hull.
std::vector<BlochVec> spiral_sphere_points(std::size_t count);

} // namespace szilard
