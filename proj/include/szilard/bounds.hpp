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
 * Local hidden state (LHS) bound on the work a classical engine can extract
 * when Bob mixes the three decompositions with weights (c1, c2, c3).
 *
 * A classical engine holds the medium in a pure state v drawn from an
 * ensemble whose average is the Gibbs vector (0, 0, eta). Alice knows v and
 * announces, for each decomposition, the outcome whose unitary extracts the
 * most work. The best such engine is the linear program
 *
 *     maximize   sum_l p_l f(v_l)
 *     subject to sum_l p_l = 1,  sum_l p_l v_l = (0, 0, eta),  p >= 0,
 *
 * with f(v) = sum_i c_i max_{+-} [E(v) - E(R_i^{+-} v)]. f is a sum of
 * maxima of linear functions and therefore convex, so mixed hidden states
 * never help and the support can be restricted to the unit sphere.
 */

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "szilard/engine.hpp"
#include "szilard/states.hpp"

namespace szilard {

struct LhsBoundQuery {
    double eta = 0.0;
    Strategy strategy = Strategy::uniform3();
};

/// 1/2 (eta + (c2 + c3) eta^2 + sqrt(c1^2 + (c2^2 + c3^2)(1 - eta^2))).
///
/// This dominates the LP optimum everywhere and equals it exactly when
/// c1^2 >= eta^2 (c2^2 + c3^2); see closed_bound_is_tight().
double lhs_bound_closed(const LhsBoundQuery &query);

/// Whether the closed form coincides with the LHS optimum at this query.
bool closed_bound_is_tight(const LhsBoundQuery &query);

struct HiddenState {
    double weight = 0.0;
    BlochVec direction = BlochVec::UnitZ();
};

struct LhsEnsemble {
    std::vector<HiddenState> support;

    [[nodiscard]] BlochVec mean() const;
    [[nodiscard]] double total_weight() const;
};

struct OracleResult {
    double value = 0.0;
    LhsEnsemble ensemble;
    std::size_t sphere_points = 0;
    std::size_t iterations = 0;
};

inline constexpr std::size_t kMinOracleResolution = 1000;

/// Work a classical engine extracts from hidden pure state `v`, i.e. f(v).
double hidden_state_gain(const BlochVec &v, const Strategy &strategy, double eta);

/// Solves the LP above over spiral_sphere_points(resolution).
OracleResult lhs_bound_oracle(const LhsBoundQuery &query, std::size_t resolution);

/// A classical engine: a hidden-state ensemble plus Alice's announcement
/// table (+1 / -1 per hidden state and decomposition).
struct ClassicalEngine {
    double eta = 0.0;
    LhsEnsemble ensemble;
    std::vector<std::array<int, 3>> announcements;
};

/// Announcement table that maximizes the work for each hidden state.
ClassicalEngine make_classical_engine(const LhsEnsemble &ensemble, double eta);

/// Average work of a classical engine, computed with density matrices and
/// the decomposition unitaries rather than Bloch rotations.
double classical_engine_work(const ClassicalEngine &engine, const Strategy &strategy);

/// average_work(rho, strategy) - lhs_bound_closed at effective_eta(rho).
/// Positive values certify that no LHS model reproduces the engine.
double violation(const QState4 &rho, const Strategy &strategy);

/// q at which violation(family(eta, q), strategy) crosses zero, to 1e-12 by
/// bisection. Throws NoCrossing when the sign does not change on [0, 1].
double violation_boundary(Family family, const Strategy &strategy, double eta);

} // namespace szilard
