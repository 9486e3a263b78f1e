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

#include "szilard/states.hpp"

#include <cmath>
#include <string>

#include "szilard/error.hpp"

namespace szilard {

namespace {

void require_eta(double eta) {
    if (!std::isfinite(eta) || std::abs(eta) > 1.0) {
        throw Error(ErrorCode::InvalidParam, "eta must lie in [-1, 1], got " + std::to_string(eta));
    }
}

void require_q(double q) {
    if (!std::isfinite(q) || q < 0.0 || q > 1.0) {
        throw Error(ErrorCode::InvalidParam, "q must lie in [0, 1], got " + std::to_string(q));
    }
}

} // namespace

GibbsParam::GibbsParam(double eta) : eta_(eta) { require_eta(eta); }

GibbsParam GibbsParam::from_beta(double beta) {
    if (std::isnan(beta)) {
        throw Error(ErrorCode::InvalidParam, "beta is NaN");
    }
    // (e^-b - 1)/(e^-b + 1) == -tanh(b/2), which stays finite for large |b|.
    return GibbsParam(-std::tanh(0.5 * beta));
}

std::string_view to_string(Family family) noexcept {
    switch (family) {
    case Family::PureEntangled:
        return "pure";
    case Family::ClassicalCorrelated:
        return "classical";
    case Family::GibbsInvariant:
        return "gibbs-invariant";
    case Family::Werner:
        return "werner";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
    if (name == "pure" || name == "PureEntangled") {
        return Family::PureEntangled;
    }
    if (name == "classical" || name == "ClassicalCorrelated") {
        return Family::ClassicalCorrelated;
    }
    if (name == "gibbs-invariant" || name == "gi" || name == "GibbsInvariant") {
        return Family::GibbsInvariant;
    }
    if (name == "werner" || name == "Werner") {
        return Family::Werner;
    }
    return std::nullopt;
}

QState2 gibbs(double eta) {
    require_eta(eta);
    QState2 rho = QState2::Zero();
    rho(0, 0) = 0.5 * (1.0 - eta);
    rho(1, 1) = 0.5 * (1.0 + eta);
    return rho;
}

QState4 pure_entangled(double eta) {
    require_eta(eta);
    Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
    psi(0) = std::sqrt(0.5 * (1.0 - eta)); // |00>
    psi(3) = std::sqrt(0.5 * (1.0 + eta)); // |11>
    return psi * psi.adjoint();
}

QState4 classical_correlated(double eta) {
    require_eta(eta);
    QState4 rho = QState4::Zero();
    rho(0, 0) = 0.5 * (1.0 - eta);
    rho(3, 3) = 0.5 * (1.0 + eta);
    return rho;
}

QState4 gibbs_invariant(double eta, double q) {
    require_q(q);
    return q * pure_entangled(eta) + (1.0 - q) * classical_correlated(eta);
}

QState4 werner(double eta, double q) {
    require_q(q);
    return q * pure_entangled(eta) + (0.25 * (1.0 - q)) * QState4::Identity();
}

QState4 StateFamily::build() const { return make_state(tag, eta, q); }

QState4 make_state(Family family, double eta, double q) {
    switch (family) {
    case Family::PureEntangled:
        return pure_entangled(eta);
    case Family::ClassicalCorrelated:
        return classical_correlated(eta);
    case Family::GibbsInvariant:
        return gibbs_invariant(eta, q);
    case Family::Werner:
        return werner(eta, q);
    }
    throw Error(ErrorCode::InvalidParam, "unknown state family");
}

double effective_eta(const QState4 &rho) {
    const BlochVec v = bloch_of(partial_trace_bath(rho));
    if (std::hypot(v.x(), v.y()) > 1e-9) {
        throw Error(ErrorCode::NonDiagonalReduced, "medium marginal has transverse Bloch components");
    }
    return v.z();
}

} // namespace szilard
