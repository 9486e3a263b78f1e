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
 * The measurement-feedback engine cycle. Alice measures the bath qubit along
 * the axis of a decomposition, announces the outcome, and Bob applies the
 * matching unitary to the medium. Work is the drop of the medium's energy
 * under H_M = |1><1|.
 */

#pragma once

#include <array>
#include <optional>

#include "szilard/qmath.hpp"

namespace szilard {

/// Energy of a medium state under H_M = |1><1|.
double energy(const QState2 &rho);
/// (1 + vz) / 2.
double energy(const BlochVec &v);

/// Mixing weights (c1, c2, c3) over the three decompositions.
class Strategy {
  public:
    /// Throws InvalidStrategy unless every weight is >= 0 and they sum to 1.
    Strategy(double c1, double c2, double c3);

    static Strategy single(int index);
    static Strategy uniform2() { return {0.5, 0.5, 0.0}; }
    static Strategy uniform3() { return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}; }

    /// Weight of decomposition `index` (1-based).
    [[nodiscard]] double weight(int index) const { return weights_.at(index - 1); }
    [[nodiscard]] const std::array<double, 3> &weights() const noexcept { return weights_; }
    /// Number of decompositions with nonzero weight.
    [[nodiscard]] int support_size() const noexcept;

  private:
    std::array<double, 3> weights_;
};

/// One way of splitting gibbs(eta) into two pure states n^+ and n^-, the bath
/// axis Alice measures to prepare them, and the unitaries that send each to
/// the ground state.
struct Decomposition {
    int index = 1;
    double eta = 0.0;
    /// Rotation angle of U2 and U3: cos(alpha) = -eta, sin(alpha) = sqrt(1 - eta^2).
    double alpha = 0.0;
    Axis bath_axis = Axis::Z;
    /// Bath projector for the announced outcome "+" (resp. "-").
    CMat2 bath_plus;
    CMat2 bath_minus;
    CMat2 unitary_plus;
    CMat2 unitary_minus;
    BlochVec target_plus;
    BlochVec target_minus;
};

/// Decomposition D_index at Gibbs parameter eta.
///   D1: bath sigma_z, n = (0, 0, +-1), U+ = sigma_x, U- = I.
///   D2: bath sigma_y, n = (0, -+s, eta), U+- = rotation by alpha about +-x.
///   D3: bath sigma_x, n = (+-s, 0, eta), U+- = rotation by alpha about +-y.
/// with s = sqrt(1 - eta^2). The "+" outcome is whichever bath projector
/// steers the entangled pure state toward n^+.
Decomposition make_decomposition(int index, double eta);

struct Branch {
    double probability = 0.0;
    /// Medium state conditioned on the outcome, before and after Bob's
    /// unitary. Empty for branches with probability below 1e-12.
    std::optional<QState2> pre_state;
    std::optional<QState2> post_state;
    double work = 0.0;
};

struct EngineRun {
    Branch plus;
    Branch minus;
    double initial_energy = 0.0;
    double average_work = 0.0;
};

inline constexpr double kNegligibleBranch = 1e-12;
inline constexpr double kEtaMatch = 1e-9;

/// Measure-then-feedback. Throws DecompositionMismatch when `d.eta` is not
/// the medium's effective eta.
EngineRun run_protocol(const QState4 &rho, const Decomposition &d);

/// Same cycle as a single channel: rotate the bath into the computational
/// basis, dephase it, apply CROT(U+, U-) with the bath as control.
EngineRun run_protocol_deferred(const QState4 &rho, const Decomposition &d);

/// sum_i c_i * run_protocol(rho, D_i).average_work with D_i built at
/// effective_eta(rho).
double average_work(const QState4 &rho, const Strategy &strategy);

/// Per-decomposition average works (W_D1, W_D2, W_D3).
std::array<double, 3> decomposition_works(const QState4 &rho);

} // namespace szilard
