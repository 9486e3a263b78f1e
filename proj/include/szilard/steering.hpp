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

#include <array>
#include <span>
#include <vector>

#include "szilard/bounds.hpp"
#include "szilard/engine.hpp"
#include "szilard/states.hpp"

namespace szilard {

/// Linear steering inequality with n = 2 (axes z, y) or n = 3 (z, y, x):
/// S_n = (1/n) sum_k |<sigma_k (x) sigma_k>| <= 1/sqrt(n) for any LHS model.
struct SteeringReport {
    int settings = 3;
    double value = 0.0;
    double bound = 0.0;
    double violation = 0.0;
    /// <zz>, <yy>, <xx>.
    std::array<double, 3> correlators{};
};

SteeringReport linear_steering(const QState4 &rho, int settings);

struct Grid {
    std::vector<double> etas;
    std::vector<double> qs;
};

/// `steps` evenly spaced values from `lo` to `hi` inclusive; a single step
/// yields {lo}.
std::vector<double> linspace(double lo, double hi, std::size_t steps);

struct ScatterPoint {
    double eta = 0.0;
    double q = 0.0;
    double steering_violation = 0.0;
    double work_violation = 0.0;
};

struct ScatterResult {
    int settings = 3;
    std::vector<ScatterPoint> points;
    /// Spearman rank correlation between the two violation columns.
    double rank_correlation = 0.0;
};

/// Spearman correlation with average ranks for ties. Returns 0 when either
/// series is constant.
double spearman(std::span<const double> x, std::span<const double> y);

/// Pairs the linear steering violation (n = number of decompositions the
/// strategy uses, at least 2) with the work violation over the grid.
ScatterResult correlation_scatter(Family family, const Strategy &strategy, const Grid &grid);

} // namespace szilard
