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

/**
 * @file
 * Revised simplex for linear programs with four equality rows and many
 * columns:
 *
 *     maximize  cost . x   subject to  A x = b,  x >= 0,   A is 4 x n.
 *
 * The basis inverse is an explicit 4x4 matrix refactored after every pivot.
 * Pricing is Dantzig (largest reduced cost); after a degenerate pivot the
 * next choice falls back to Bland's lowest-index rule on both the entering
 * and leaving variable, which rules out cycling.
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace szilard {

using LpMatrix = Eigen::Matrix<double, 4, Eigen::Dynamic>;

struct LpBasic {
    std::size_t column;
    double value;
};

struct LpSolution {
    double objective = 0.0;
    /// Structural basic variables with positive value.
    std::vector<LpBasic> basics;
    std::size_t iterations = 0;
};

struct SimplexOptions {
    std::size_t max_iterations = 200000;
    double reduced_cost_tolerance = 1e-12;
    double pivot_tolerance = 1e-11;
};

/// Throws InfeasibleConstraint when phase one cannot reach zero
/// infeasibility and NoConvergence when the iteration cap is hit or the
/// problem is unbounded.
LpSolution maximize(const LpMatrix &a, std::span<const double> cost, const Eigen::Vector4d &b,
                    const SimplexOptions &options = {});

} // namespace szilard
