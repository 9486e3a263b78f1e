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

#include "szilard/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "szilard/error.hpp"
#include "szilard/simplex.hpp"
#include "szilard/sphere.hpp"

namespace szilard {

namespace {

void require_query(const LhsBoundQuery &query) {
    if (!std::isfinite(query.eta) || std::abs(query.eta) > 1.0) {
        throw Error(ErrorCode::InvalidParam, "eta must lie in [-1, 1]");
    }
}

// Bloch rotations of U_i^+ and U_i^- for the three decompositions.
struct RotationSet {
    std::array<std::array<Rotation3, 2>, 3> r;

    explicit RotationSet(double eta) {
        for (int i = 1; i <= 3; ++i) {
            const Decomposition d = make_decomposition(i, eta);
            r[static_cast<std::size_t>(i - 1)] = {bloch_rotation(d.unitary_plus), bloch_rotation(d.unitary_minus)};
        }
    }

    [[nodiscard]] double gain(const BlochVec &v, const Strategy &strategy) const {
        double total = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            const double c = strategy.weights()[i];
            if (c <= 0.0) {
                continue;
            }
            const double plus = energy(v) - energy(BlochVec(r[i][0] * v));
            const double minus = energy(v) - energy(BlochVec(r[i][1] * v));
            total += c * std::max(plus, minus);
        }
        return total;
    }
};

constexpr double kBisectionWidth = 1e-12;
constexpr double kViolationFloor = 1e-12;

} // namespace

double lhs_bound_closed(const LhsBoundQuery &query) {
    require_query(query);
    const auto &[c1, c2, c3] = query.strategy.weights();
    const double eta = query.eta;
    const double transverse = std::max(0.0, 1.0 - eta * eta);
    return 0.5 * (eta + (c2 + c3) * eta * eta + std::sqrt(c1 * c1 + (c2 * c2 + c3 * c3) * transverse));
}

// The closed form bounds the LP by dropping the constraint on sum p vz when
// maximizing c1|vz| + s c2|vy| + s c3|vx|. The maximizers have
// |vz| = c1 / norm, so the relaxation is exact iff |eta| <= c1 / norm, which
// rearranges to c1^2 >= eta^2 (c2^2 + c3^2) for |eta| < 1.
bool closed_bound_is_tight(const LhsBoundQuery &query) {
    require_query(query);
    const auto &[c1, c2, c3] = query.strategy.weights();
    if (std::abs(query.eta) == 1.0) {
        return true;
    }
    return c1 * c1 >= query.eta * query.eta * (c2 * c2 + c3 * c3);
}

BlochVec LhsEnsemble::mean() const {
    BlochVec m = BlochVec::Zero();
    for (const HiddenState &h : support) {
        m += h.weight * h.direction;
    }
    return m;
}

double LhsEnsemble::total_weight() const {
    double total = 0.0;
    for (const HiddenState &h : support) {
        total += h.weight;
    }
    return total;
}

double hidden_state_gain(const BlochVec &v, const Strategy &strategy, double eta) {
    return RotationSet(eta).gain(v, strategy);
}

OracleResult lhs_bound_oracle(const LhsBoundQuery &query, std::size_t resolution) {
    require_query(query);
    if (resolution < kMinOracleResolution) {
        throw Error(ErrorCode::InvalidParam,
                    "oracle resolution must be at least " + std::to_string(kMinOracleResolution));
    }

    const std::vector<BlochVec> points = spiral_sphere_points(resolution);
    const RotationSet rotations(query.eta);

    LpMatrix a(4, static_cast<Eigen::Index>(points.size()));
    std::vector<double> gains(points.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
        const auto col = static_cast<Eigen::Index>(j);
        a(0, col) = 1.0;
        a.block<3, 1>(1, col) = points[j];
        gains[j] = rotations.gain(points[j], query.strategy);
    }
    const Eigen::Vector4d b(1.0, 0.0, 0.0, query.eta);

    const LpSolution lp = maximize(a, gains, b);

    OracleResult result;
    result.value = lp.objective;
    result.sphere_points = points.size();
    result.iterations = lp.iterations;
    for (const LpBasic &basic : lp.basics) {
        result.ensemble.support.push_back({basic.value, points[basic.column]});
    }
    return result;
}

ClassicalEngine make_classical_engine(const LhsEnsemble &ensemble, double eta) {
    ClassicalEngine engine;
    engine.eta = eta;
    engine.ensemble = ensemble;
    for (const HiddenState &h : ensemble.support) {
        const QState2 rho = state_of(h.direction);
        std::array<int, 3> table{};
        for (int i = 1; i <= 3; ++i) {
            const Decomposition d = make_decomposition(i, eta);
            const double plus = energy(rho) - energy(conjugate(d.unitary_plus, rho));
            const double minus = energy(rho) - energy(conjugate(d.unitary_minus, rho));
            table[static_cast<std::size_t>(i - 1)] = plus >= minus ? +1 : -1;
        }
        engine.announcements.push_back(table);
    }
    return engine;
}

double classical_engine_work(const ClassicalEngine &engine, const Strategy &strategy) {
    std::array<Decomposition, 3> decompositions{make_decomposition(1, engine.eta), make_decomposition(2, engine.eta),
                                                make_decomposition(3, engine.eta)};
    double total = 0.0;
    for (std::size_t l = 0; l < engine.ensemble.support.size(); ++l) {
        const HiddenState &h = engine.ensemble.support[l];
        const QState2 rho = state_of(h.direction);
        for (std::size_t i = 0; i < 3; ++i) {
            const double c = strategy.weights()[i];
            if (c <= 0.0) {
                continue;
            }
            const Decomposition &d = decompositions[i];
            const CMat2 &u = engine.announcements[l][i] > 0 ? d.unitary_plus : d.unitary_minus;
            total += h.weight * c * (energy(rho) - energy(conjugate(u, rho)));
        }
    }
    return total;
}

double violation(const QState4 &rho, const Strategy &strategy) {
    const double eta = effective_eta(rho);
    return average_work(rho, strategy) - lhs_bound_closed({eta, strategy});
}

double violation_boundary(Family family, const Strategy &strategy, double eta) {
    if (family != Family::GibbsInvariant && family != Family::Werner) {
        throw Error(ErrorCode::InvalidParam, "boundary needs the gibbs-invariant or werner family");
    }
    if (!std::isfinite(eta) || std::abs(eta) >= 1.0) {
        throw Error(ErrorCode::InvalidParam, "boundary needs |eta| < 1");
    }
    // Excess at round-off level is not a violation.
    auto violates = [&](double q) { return violation(make_state(family, eta, q), strategy) > kViolationFloor; };

    double lo = 0.0;
    double hi = 1.0;
    const bool lo_violates = violates(lo);
    if (lo_violates == violates(hi)) {
        throw Error(ErrorCode::NoCrossing, "violation keeps one sign on q in [0, 1] at eta=" + std::to_string(eta));
    }
    while (hi - lo > kBisectionWidth) {
        const double mid = 0.5 * (lo + hi);
        if (violates(mid) == lo_violates) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace szilard
