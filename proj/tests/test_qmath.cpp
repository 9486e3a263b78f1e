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
#include <numbers>

#include <gtest/gtest.h>

#include "szilard/qmath.hpp"
#include "szilard/states.hpp"
#include "test_support.hpp"

namespace szilard {
namespace {

using testing::distance;
using testing::expect_error;

TEST(Tensor, IdentityTimesIdentity) {
    EXPECT_LT(distance(tensor(CMat2::Identity(), CMat2::Identity()), CMat4::Identity().eval()), 1e-15);
}

TEST(Tensor, ExcitedProjectors) {
    CMat4 expected = CMat4::Zero();
    expected(3, 3) = 1.0;
    EXPECT_LT(distance(tensor(excited_projector(), excited_projector()), expected), 1e-15);
}

TEST(Tensor, SigmaXSigmaZHandExpanded) {
    // sigma_x = [[0,1],[1,0]], sigma_z = diag(-1, 1) in our basis ordering.
    // Block (i,j) of the product is sigma_x(i,j) * sigma_z.
    CMat4 expected;
    expected << 0, 0, -1, 0, //
        0, 0, 0, 1,          //
        -1, 0, 0, 0,         //
        0, 1, 0, 0;
    EXPECT_LT(distance(tensor(pauli::x(), pauli::z()), expected), 1e-15);
}

TEST(Tensor, IndexLayoutAndTrace) {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 50; ++trial) {
        const CMat2 a = testing::random_matrix<CMat2>(gen);
        const CMat2 b = testing::random_matrix<CMat2>(gen);
        const CMat4 t = tensor(a, b);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                for (int k = 0; k < 2; ++k) {
                    for (int l = 0; l < 2; ++l) {
                        EXPECT_EQ(t(2 * i + k, 2 * j + l), a(i, j) * b(k, l));
                    }
                }
            }
        }
        EXPECT_LT(std::abs(t.trace() - a.trace() * b.trace()), 1e-12);
    }
}

TEST(PartialTrace, PureEntangledGivesGibbs) {
    for (double eta : testing::eta_grid()) {
        EXPECT_LT(distance(partial_trace_bath(pure_entangled(eta)), gibbs(eta)), 1e-12) << eta;
    }
}

TEST(PartialTrace, ProductStateReturnsMedium) {
    std::mt19937_64 gen(3);
    const CMat2 a = testing::random_density<CMat2>(gen);
    const CMat2 b = testing::random_density<CMat2>(gen);
    EXPECT_LT(distance(partial_trace_bath(tensor(a, b)), b), 1e-12);
    EXPECT_LT(distance(partial_trace_medium(tensor(a, b)), a), 1e-12);
}

TEST(PartialTrace, OfTensorScalesByTrace) {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 50; ++trial) {
        const CMat2 a = testing::random_matrix<CMat2>(gen);
        const CMat2 b = testing::random_matrix<CMat2>(gen);
        EXPECT_LT(distance(trace_out_bath(tensor(a, b)), (b * a.trace()).eval()), 1e-12);
    }
}

TEST(PartialTrace, WernerHandExpansion) {
    // q * diag-part of rho_1 marginal + (1-q) * I/2:
    // p(1) = 0.5 * 0.7 + 0.5 * 0.5 = 0.6, so vz = 0.2.
    const CMat2 reduced = partial_trace_bath(werner(0.4, 0.5));
    EXPECT_NEAR(reduced(1, 1).real(), 0.6, 1e-12);
    EXPECT_NEAR(reduced(0, 0).real(), 0.4, 1e-12);
    EXPECT_LT(std::abs(reduced(0, 1)), 1e-15);
    EXPECT_NEAR(bloch_of(reduced).z(), 0.2, 1e-12);
}

TEST(PartialTrace, RejectsInvalidState) {
    CMat4 bad = CMat4::Identity();
    expect_error(ErrorCode::InvalidState, [&] { (void)partial_trace_bath(bad); });
}

TEST(Bloch, ConventionAnchors) {
    EXPECT_LT((bloch_of(excited_projector()) - BlochVec(0, 0, 1)).norm(), 1e-15);
    EXPECT_LT((bloch_of(ground_projector()) - BlochVec(0, 0, -1)).norm(), 1e-15);
    EXPECT_LT(bloch_of(gibbs(0.0)).norm(), 1e-15);
    for (double eta : testing::eta_grid()) {
        EXPECT_LT((bloch_of(gibbs(eta)) - BlochVec(0, 0, eta)).norm(), 1e-15);
    }
}

TEST(Bloch, RoundTrip) {
    std::mt19937_64 gen(17);
    for (int trial = 0; trial < 200; ++trial) {
        const CMat2 rho = testing::random_density<CMat2>(gen);
        EXPECT_LT(distance(state_of(bloch_of(rho)), rho), 1e-12);
    }
}

TEST(Bloch, EigenvaluesMatchLength) {
    std::mt19937_64 gen(23);
    for (int trial = 0; trial < 200; ++trial) {
        const BlochVec v = testing::random_bloch(gen);
        const Eigen::SelfAdjointEigenSolver<CMat2> solver(state_of(v));
        EXPECT_NEAR(solver.eigenvalues()(0), 0.5 * (1.0 - v.norm()), 1e-12);
        EXPECT_NEAR(solver.eigenvalues()(1), 0.5 * (1.0 + v.norm()), 1e-12);
        EXPECT_NEAR(min_eigenvalue(state_of(v)), 0.5 * (1.0 - v.norm()), 1e-12);
    }
}

TEST(Bloch, RejectsLongVector) {
    expect_error(ErrorCode::InvalidBloch, [] { (void)state_of(BlochVec(0.0, 0.8, 0.8)); });
    EXPECT_NO_THROW((void)state_of(BlochVec(0.0, 0.0, 1.0 + 1e-10)));
}

TEST(Validate, Examples) {
    EXPECT_EQ(check_density(gibbs(0.3)), DensityCheck::Ok);

    CMat2 negative = CMat2::Zero();
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    EXPECT_EQ(check_density(negative), DensityCheck::Positivity);

    EXPECT_EQ(check_density((pure_entangled(0.3) * (1.0 + 1e-6)).eval()), DensityCheck::Trace);

    CMat2 skew = gibbs(0.0);
    skew(0, 1) = 0.1;
    EXPECT_EQ(check_density(skew), DensityCheck::Hermiticity);

    expect_error(ErrorCode::InvalidState, [&] { validate_density(negative); });
}

TEST(Validate, FourByFourPositivity) {
    // Unit trace and Hermitian, but |00><11| coherence too large.
    CMat4 rho = classical_correlated(0.0);
    rho(0, 3) = 0.6;
    rho(3, 0) = 0.6;
    EXPECT_EQ(check_density(rho), DensityCheck::Positivity);
    EXPECT_EQ(check_density(werner(0.2, 0.3)), DensityCheck::Ok);
}

TEST(Validate, ToleratesRoundoffNegativeEigenvalue) {
    CMat2 rho = CMat2::Zero();
    rho(0, 0) = 1.0 + 1e-12;
    rho(1, 1) = -1e-12;
    EXPECT_EQ(check_density(rho), DensityCheck::Ok);
}

TEST(Unitary, ConjugationPreservesTraceAndPositivity) {
    std::mt19937_64 gen(29);
    for (int trial = 0; trial < 100; ++trial) {
        const CMat4 rho = testing::random_density<CMat4>(gen);
        const CMat4 u = testing::random_unitary<CMat4>(gen);
        const CMat4 out = conjugate(u, rho);
        EXPECT_NEAR(real_trace(out), 1.0, 1e-12);
        EXPECT_EQ(check_density(out), DensityCheck::Ok);
    }
}

TEST(Pauli, AlgebraIsRightHanded) {
    const Complex i{0.0, 1.0};
    EXPECT_LT(distance((pauli::x() * pauli::y()).eval(), (i * pauli::z()).eval()), 1e-15);
    EXPECT_LT(distance((pauli::y() * pauli::z()).eval(), (i * pauli::x()).eval()), 1e-15);
    EXPECT_LT(distance((pauli::z() * pauli::x()).eval(), (i * pauli::y()).eval()), 1e-15);
    // sigma_z |1> = +|1>
    EXPECT_EQ(pauli::z()(1, 1), Complex(1.0, 0.0));
}

TEST(Unitary, RotationIsCounterclockwise) {
    const CMat2 u = rotation_unitary(BlochVec::UnitX(), std::numbers::pi / 2);
    const BlochVec out = bloch_of(conjugate(u, state_of(BlochVec::UnitY())));
    EXPECT_LT((out - BlochVec::UnitZ()).norm(), 1e-12);

    const Rotation3 r = bloch_rotation(u);
    EXPECT_LT((r * BlochVec::UnitY() - BlochVec::UnitZ()).norm(), 1e-12);
    EXPECT_NEAR(r.determinant(), 1.0, 1e-12);
}

TEST(Unitary, BlochRotationMatchesConjugation) {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 100; ++trial) {
        const CMat2 u = testing::random_unitary<CMat2>(gen);
        const BlochVec v = testing::random_bloch(gen);
        const BlochVec direct = bloch_of(conjugate(u, state_of(v)));
        EXPECT_LT((bloch_rotation(u) * v - direct).norm(), 1e-12);
    }
}

} // namespace
} // namespace szilard
