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

#include <cmath>

#include <gtest/gtest.h>

#include "szilard/states.hpp"
#include "test_support.hpp"

namespace szilard {
namespace {

using testing::distance;
using testing::expect_error;

constexpr Family kFamilies[] = {Family::PureEntangled, Family::ClassicalCorrelated, Family::GibbsInvariant,
                                Family::Werner};

TEST(Gibbs, Examples) {
    EXPECT_LT(distance(gibbs(0.0), (0.5 * CMat2::Identity()).eval()), 1e-15);
    EXPECT_LT(distance(gibbs(-1.0), ground_projector()), 1e-15);
    expect_error(ErrorCode::InvalidParam, [] { (void)gibbs(1.5); });
}

TEST(Gibbs, FromBeta) {
    // e^-ln3 = 1/3: (1/3 - 1) / (1/3 + 1) = -1/2.
    const GibbsParam p = GibbsParam::from_beta(std::log(3.0));
    EXPECT_NEAR(p.eta(), -0.5, 1e-15);
    const CMat2 rho = gibbs(p.eta());
    EXPECT_NEAR(rho(1, 1).real(), 0.25, 1e-15);
    EXPECT_NEAR(rho(0, 0).real(), 0.75, 1e-15);

    EXPECT_EQ(GibbsParam::from_beta(0.0).eta(), 0.0);
    EXPECT_NEAR(GibbsParam::from_beta(60.0).eta(), -1.0, 1e-15);
    for (double beta = 0.0; beta < 20.0; beta += 0.37) {
        const double eta = GibbsParam::from_beta(beta).eta();
        EXPECT_LE(eta, 0.0);
        EXPECT_GT(eta, -1.0 - 1e-15);
    }
    expect_error(ErrorCode::InvalidParam, [] { (void)GibbsParam(-1.01); });
}

TEST(PureEntangled, Examples) {
    Eigen::Vector4cd bell = Eigen::Vector4cd::Zero();
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    EXPECT_LT(distance(pure_entangled(0.0), (bell * bell.adjoint()).eval()), 1e-15);

    CMat4 top = CMat4::Zero();
    top(3, 3) = 1.0;
    EXPECT_LT(distance(pure_entangled(1.0), top), 1e-15);

    for (double eta : testing::eta_grid()) {
        const CMat4 rho = pure_entangled(eta);
        EXPECT_NEAR((rho * rho).trace().real(), 1.0, 1e-12);
    }
}

TEST(ClassicalCorrelated, Examples) {
    CMat4 expected = CMat4::Zero();
    expected(0, 0) = expected(3, 3) = 0.5;
    EXPECT_LT(distance(classical_correlated(0.0), expected), 1e-15);
    for (double eta : testing::eta_grid()) {
        const CMat4 rho = classical_correlated(eta);
        EXPECT_EQ(CMat4(rho.diagonal().asDiagonal()), rho);
        EXPECT_LT(distance(partial_trace_bath(rho), gibbs(eta)), 1e-12);
    }
}

TEST(Mixtures, Endpoints) {
    for (double eta : testing::eta_grid()) {
        EXPECT_LT(distance(gibbs_invariant(eta, 1.0), pure_entangled(eta)), 1e-15);
        EXPECT_LT(distance(gibbs_invariant(eta, 0.0), classical_correlated(eta)), 1e-15);
        EXPECT_LT(distance(werner(eta, 0.0), (0.25 * CMat4::Identity()).eval()), 1e-15);
    }
    expect_error(ErrorCode::InvalidParam, [] { (void)werner(0.0, 1.2); });
    expect_error(ErrorCode::InvalidParam, [] { (void)gibbs_invariant(0.0, -0.1); });
}

TEST(Mixtures, Marginals) {
    for (double eta : testing::eta_grid()) {
        for (double q = 0.0; q <= 1.0; q += 0.1) {
            EXPECT_LT(distance(partial_trace_bath(gibbs_invariant(eta, q)), gibbs(eta)), 1e-12);
            EXPECT_NEAR(bloch_of(partial_trace_bath(werner(eta, q))).z(), q * eta, 1e-12);
        }
    }
}

TEST(Mixtures, LinearInQ) {
    for (double eta : testing::eta_grid()) {
        for (double q = 0.0; q <= 1.0; q += 0.125) {
            const CMat4 gi = q * gibbs_invariant(eta, 1.0) + (1.0 - q) * gibbs_invariant(eta, 0.0);
            EXPECT_LT(distance(gibbs_invariant(eta, q), gi), 1e-12);
            const CMat4 w = q * werner(eta, 1.0) + (1.0 - q) * 0.25 * CMat4::Identity();
            EXPECT_LT(distance(werner(eta, q), w), 1e-12);
        }
    }
}

TEST(Mixtures, OnlyEndpointIsPure) {
    for (double eta = -0.95; eta < 0.96; eta += 0.05) {
        for (double q = 0.05; q < 0.96; q += 0.05) {
            const CMat4 rho = gibbs_invariant(eta, q);
            EXPECT_LT((rho * rho).trace().real(), 1.0 - 1e-9);
        }
    }
}

TEST(Families, AllValidOnGrid) {
    for (Family f : kFamilies) {
        for (double eta = -0.99; eta < 1.0; eta += 0.09) {
            for (int k = 0; k <= 10; ++k) {
                const double q = 0.1 * k;
                EXPECT_EQ(check_density(make_state(f, eta, q)), DensityCheck::Ok)
                    << to_string(f) << " eta=" << eta << " q=" << q;
            }
        }
    }
}

TEST(Families, Parse) {
    for (Family f : kFamilies) {
        EXPECT_EQ(parse_family(to_string(f)), f);
    }
    EXPECT_EQ(parse_family("Werner"), Family::Werner);
    EXPECT_FALSE(parse_family("bell").has_value());
    EXPECT_LT(distance(StateFamily{Family::Werner, 0.3, 0.4}.build(), werner(0.3, 0.4)), 1e-15);
}

TEST(EffectiveEta, Examples) {
    for (double q = 0.0; q <= 1.0; q += 0.25) {
        EXPECT_NEAR(effective_eta(gibbs_invariant(0.5, q)), 0.5, 1e-12);
        EXPECT_NEAR(effective_eta(werner(0.0, q)), 0.0, 1e-15);
    }
    EXPECT_NEAR(effective_eta(werner(0.5, 0.4)), 0.2, 1e-12);
}

TEST(EffectiveEta, RejectsCoherentMarginal) {
    const CMat4 rho = tensor(gibbs(0.0), state_of(BlochVec(1.0, 0.0, 0.0)));
    expect_error(ErrorCode::NonDiagonalReduced, [&] { (void)effective_eta(rho); });
}

} // namespace
} // namespace szilard
