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

#include "szilard/steering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "szilard/error.hpp"

namespace szilard {

namespace {

std::vector<double> average_ranks(std::span<const double> values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(values.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        const double rank = 0.5 * static_cast<double>(i + j);
        for (std::size_t k = i; k <= j; ++k) {
            ranks[order[k]] = rank;
        }
        i = j + 1;
    }
    return ranks;
}

} // namespace

SteeringReport linear_steering(const QState4 &rho, int settings) {
    if (settings != 2 && settings != 3) {
        throw Error(ErrorCode::InvalidParam, "linear steering supports 2 or 3 settings");
    }
    validate_density(rho);

    SteeringReport report;
    report.settings = settings;
    const std::array<Axis, 3> axes{Axis::Z, Axis::Y, Axis::X};
    double sum = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
        const CMat2 sigma = pauli::along(axes[k]);
        report.correlators[k] = expectation(tensor(sigma, sigma), rho);
        if (k < static_cast<std::size_t>(settings)) {
            // Bob picks the sign of each term.
            sum += std::abs(report.correlators[k]);
        }
    }
    report.value = sum / settings;
    report.bound = 1.0 / std::sqrt(static_cast<double>(settings));
    report.violation = report.value - report.bound;
    return report;
}

std::vector<double> linspace(double lo, double hi, std::size_t steps) {
    if (steps == 0) {
        throw Error(ErrorCode::InvalidParam, "grid needs at least one step");
    }
    std::vector<double> values(steps);
    if (steps == 1) {
        values[0] = lo;
        return values;
    }
    for (std::size_t k = 0; k < steps; ++k) {
        values[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
    }
    values.back() = hi;
    return values;
}

double spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw Error(ErrorCode::InvalidParam, "spearman needs equal-length series");
    }
    if (x.size() < 2) {
        return 0.0;
    }
    const std::vector<double> rx = average_ranks(x);
    const std::vector<double> ry = average_ranks(y);
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t k = 0; k < rx.size(); ++k) {
        sxy += (rx[k] - mx) * (ry[k] - my);
        sxx += (rx[k] - mx) * (rx[k] - mx);
        syy += (ry[k] - my) * (ry[k] - my);
    }
    if (sxx == 0.0 || syy == 0.0) {
        return 0.0;
    }
    return sxy / std::sqrt(sxx * syy);
}

ScatterResult correlation_scatter(Family family, const Strategy &strategy, const Grid &grid) {
    if (grid.etas.empty() || grid.qs.empty()) {
        throw Error(ErrorCode::InvalidParam, "scatter grid is empty");
    }
    ScatterResult result;
    result.settings = std::max(2, strategy.support_size());

    std::vector<double> steer;
    std::vector<double> work;
    for (double eta : grid.etas) {
        for (double q : grid.qs) {
            const QState4 rho = make_state(family, eta, q);
            ScatterPoint p;
            p.eta = eta;
            p.q = q;
            p.steering_violation = linear_steering(rho, result.settings).violation;
            p.work_violation = violation(rho, strategy);
            steer.push_back(p.steering_violation);
            work.push_back(p.work_violation);
            result.points.push_back(p);
        }
    }
    result.rank_correlation = spearman(steer, work);
    return result;
}

} // namespace szilard
