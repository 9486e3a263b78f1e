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

#include "szilard/engine.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "szilard/error.hpp"
#include "szilard/states.hpp"

namespace szilard {

namespace {

constexpr double kWeightTolerance = 1e-9;

Axis bath_axis_for(int index) {
    switch (index) {
    case 1:
        return Axis::Z;
    case 2:
        return Axis::Y;
    default:
        return Axis::X;
    }
}

void check_match(const QState4 &rho, const Decomposition &d) {
    validate_density(rho);
    const double eta = effective_eta(rho);
    if (std::abs(eta - d.eta) > kEtaMatch) {
        throw Error(ErrorCode::DecompositionMismatch, "decomposition built for eta=" +
                                                          std::to_string(d.eta) +
                                                          " but state has eta=" + std::to_string(eta));
    }
}

// Medium state left behind when the bath is projected with `projector`,
// unnormalized.
CMat2 steered_block(const QState4 &rho, const CMat2 &projector) {
    const CMat4 p = tensor(projector, CMat2::Identity());
    return trace_out_bath(p * rho * p);
}

Branch finish_branch(const CMat2 &unnormalized_pre, const CMat2 &unitary, double initial_energy) {
    Branch b;
    b.probability = real_trace(unnormalized_pre);
    if (b.probability < kNegligibleBranch) {
        return b;
    }
    b.pre_state = unnormalized_pre / b.probability;
    b.post_state = conjugate(unitary, *b.pre_state);
    b.work = initial_energy - energy(*b.post_state);
    return b;
}

double weighted_average(const Branch &plus, const Branch &minus) {
    double total = 0.0;
    for (const Branch *b : {&plus, &minus}) {
        if (b->post_state) {
            total += b->probability * b->work;
        }
    }
    return total;
}

// Unit vector spanning the range of a rank-one projector.
Eigen::Vector2cd range_vector(const CMat2 &projector) {
    const Eigen::Index col = projector.col(0).norm() >= projector.col(1).norm() ? 0 : 1;
    const Eigen::Vector2cd v = projector.col(col);
    return v / v.norm();
}

} // namespace

double energy(const QState2 &rho) { return rho(1, 1).real(); }

double energy(const BlochVec &v) { return 0.5 * (1.0 + v.z()); }

Strategy::Strategy(double c1, double c2, double c3) : weights_{c1, c2, c3} {
    double sum = 0.0;
    for (double c : weights_) {
        if (!std::isfinite(c) || c < -kWeightTolerance) {
            throw Error(ErrorCode::InvalidStrategy, "strategy weights must be nonnegative");
        }
        sum += c;
    }
    if (std::abs(sum - 1.0) > kWeightTolerance) {
        throw Error(ErrorCode::InvalidStrategy,
                    "strategy weights must sum to 1, got " + std::to_string(sum));
    }
    for (double &c : weights_) {
        c = std::max(c, 0.0);
    }
}

Strategy Strategy::single(int index) {
    if (index < 1 || index > 3) {
        throw Error(ErrorCode::InvalidStrategy, "decomposition index must be 1, 2 or 3");
    }
    std::array<double, 3> c{0.0, 0.0, 0.0};
    c[static_cast<std::size_t>(index - 1)] = 1.0;
    return {c[0], c[1], c[2]};
}

int Strategy::support_size() const noexcept {
    return static_cast<int>(std::count_if(weights_.begin(), weights_.end(), [](double c) { return c > 0.0; }));
}

Decomposition make_decomposition(int index, double eta) {
    if (index < 1 || index > 3) {
        throw Error(ErrorCode::InvalidParam, "decomposition index must be 1, 2 or 3");
    }
    if (!std::isfinite(eta) || std::abs(eta) > 1.0) {
        throw Error(ErrorCode::InvalidParam, "eta must lie in [-1, 1]");
    }

    Decomposition d;
    d.index = index;
    d.eta = eta;
    d.bath_axis = bath_axis_for(index);

    const double s = std::sqrt(std::max(0.0, 1.0 - eta * eta));
    // 2 atan(sqrt((1+eta)/(1-eta))) has cos = -eta and sin = s; atan2 keeps
    // the eta = +-1 limits (pi and 0) exact.
    d.alpha = std::atan2(s, -eta);

    switch (index) {
    case 1:
        d.target_plus = {0.0, 0.0, 1.0};
        d.target_minus = {0.0, 0.0, -1.0};
        d.unitary_plus = pauli::x();
        d.unitary_minus = pauli::identity();
        break;
    case 2:
        d.target_plus = {0.0, -s, eta};
        d.target_minus = {0.0, s, eta};
        d.unitary_plus = rotation_unitary(BlochVec::UnitX(), d.alpha);
        d.unitary_minus = rotation_unitary(-BlochVec::UnitX(), d.alpha);
        break;
    default:
        d.target_plus = {s, 0.0, eta};
        d.target_minus = {-s, 0.0, eta};
        d.unitary_plus = rotation_unitary(BlochVec::UnitY(), d.alpha);
        d.unitary_minus = rotation_unitary(-BlochVec::UnitY(), d.alpha);
        break;
    }

    // Label outcomes operationally: project the bath of the Bell state
    // (eta = 0) and see which eigenprojector leaves the medium pointing along
    // n^+. The sign pattern of n^+ does not depend on eta.
    const CMat2 sigma = pauli::along(d.bath_axis);
    const CMat2 up = 0.5 * (CMat2::Identity() + sigma);
    const CMat2 down = 0.5 * (CMat2::Identity() - sigma);
    const BlochVec reference = index == 1 ? BlochVec(0.0, 0.0, 1.0)
                               : index == 2 ? BlochVec(0.0, -1.0, 0.0)
                                            : BlochVec(1.0, 0.0, 0.0);
    const CMat2 steered = steered_block(pure_entangled(0.0), up);
    const BlochVec direction = bloch_of(steered / real_trace(steered));
    if (direction.dot(reference) > 0.0) {
        d.bath_plus = up;
        d.bath_minus = down;
    } else {
        d.bath_plus = down;
        d.bath_minus = up;
    }
    return d;
}

EngineRun run_protocol(const QState4 &rho, const Decomposition &d) {
    check_match(rho, d);
    EngineRun run;
    run.initial_energy = energy(trace_out_bath(rho));
    run.plus = finish_branch(steered_block(rho, d.bath_plus), d.unitary_plus, run.initial_energy);
    run.minus = finish_branch(steered_block(rho, d.bath_minus), d.unitary_minus, run.initial_energy);
    run.average_work = weighted_average(run.plus, run.minus);
    return run;
}

EngineRun run_protocol_deferred(const QState4 &rho, const Decomposition &d) {
    check_match(rho, d);

    // Basis change on the bath: outcome "+" -> |1>, outcome "-" -> |0>.
    CMat2 basis_change;
    basis_change.row(1) = range_vector(d.bath_plus).adjoint();
    basis_change.row(0) = range_vector(d.bath_minus).adjoint();
    CMat4 state = conjugate(tensor(basis_change, CMat2::Identity()), rho);

    // Full dephasing of the bath in the computational basis.
    state.block<2, 2>(0, 2).setZero();
    state.block<2, 2>(2, 0).setZero();

    // CROT: bath |1> applies U+, bath |0> applies U-.
    CMat4 crot = CMat4::Zero();
    crot.block<2, 2>(0, 0) = d.unitary_minus;
    crot.block<2, 2>(2, 2) = d.unitary_plus;
    const CMat4 after = conjugate(crot, state);

    EngineRun run;
    run.initial_energy = energy(trace_out_bath(rho));
    const CMat2 final_medium = trace_out_bath(after);

    auto fill = [&](Branch &b, Eigen::Index offset) {
        const CMat2 pre = state.block<2, 2>(offset, offset);
        b.probability = real_trace(pre);
        if (b.probability < kNegligibleBranch) {
            return;
        }
        b.pre_state = pre / b.probability;
        b.post_state = after.block<2, 2>(offset, offset) / b.probability;
        b.work = run.initial_energy - energy(*b.post_state);
    };
    fill(run.plus, 2);
    fill(run.minus, 0);

    // The channel output already averages both branches.
    run.average_work = run.initial_energy - energy(final_medium);
    return run;
}

double average_work(const QState4 &rho, const Strategy &strategy) {
    const double eta = effective_eta(rho);
    double total = 0.0;
    for (int i = 1; i <= 3; ++i) {
        const double c = strategy.weight(i);
        if (c > 0.0) {
            total += c * run_protocol(rho, make_decomposition(i, eta)).average_work;
        }
    }
    return total;
}

std::array<double, 3> decomposition_works(const QState4 &rho) {
    const double eta = effective_eta(rho);
    std::array<double, 3> works{};
    for (int i = 1; i <= 3; ++i) {
        works[static_cast<std::size_t>(i - 1)] = run_protocol(rho, make_decomposition(i, eta)).average_work;
    }
    return works;
}

} // namespace szilard
