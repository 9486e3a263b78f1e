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

#include "szilard/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "szilard/error.hpp"

namespace szilard {

namespace {

constexpr Complex kI{0.0, 1.0};

template <typename Mat> DensityCheck check_common(const Mat &rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol::kHermitian) {
        return DensityCheck::Hermiticity;
    }
    if (std::abs(rho.trace() - Complex{1.0, 0.0}) > tol::kTrace) {
        return DensityCheck::Trace;
    }
    if (min_eigenvalue(rho) < -tol::kPositivity) {
        return DensityCheck::Positivity;
    }
    return DensityCheck::Ok;
}

template <typename Mat> void throw_if_invalid(const Mat &rho) {
    const DensityCheck check = check_density(rho);
    if (check != DensityCheck::Ok) {
        throw Error(ErrorCode::InvalidState,
                    "density matrix fails " + std::string(to_string(check)) + " check");
    }
}

} // namespace

namespace pauli {

CMat2 identity() { return CMat2::Identity(); }

CMat2 x() {
    CMat2 m;
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

// With |1> as the +1 eigenvector of z, y has to change sign relative to the
// textbook matrix to keep x*y = i*z.
CMat2 y() {
    CMat2 m;
    m << 0.0, kI, -kI, 0.0;
    return m;
}

CMat2 z() {
    CMat2 m;
    m << -1.0, 0.0, 0.0, 1.0;
    return m;
}

CMat2 along(Axis axis) {
    switch (axis) {
    case Axis::X:
        return x();
    case Axis::Y:
        return y();
    case Axis::Z:
        return z();
    }
    return z();
}

} // namespace pauli

CMat2 ground_projector() {
    CMat2 m = CMat2::Zero();
    m(0, 0) = 1.0;
    return m;
}

CMat2 excited_projector() {
    CMat2 m = CMat2::Zero();
    m(1, 1) = 1.0;
    return m;
}

CMat4 tensor(const CMat2 &bath, const CMat2 &medium) {
    CMat4 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    out(2 * i + k, 2 * j + l) = bath(i, j) * medium(k, l);
                }
            }
        }
    }
    return out;
}

CMat2 trace_out_bath(const CMat4 &op) {
    CMat2 out = CMat2::Zero();
    for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
            out(k, l) = op(k, l) + op(2 + k, 2 + l);
        }
    }
    return out;
}

CMat2 trace_out_medium(const CMat4 &op) {
    CMat2 out = CMat2::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out(i, j) = op(2 * i, 2 * j) + op(2 * i + 1, 2 * j + 1);
        }
    }
    return out;
}

QState2 partial_trace_bath(const QState4 &rho) {
    validate_density(rho);
    return trace_out_bath(rho);
}

QState2 partial_trace_medium(const QState4 &rho) {
    validate_density(rho);
    return trace_out_medium(rho);
}

BlochVec bloch_of(const QState2 &rho) {
    validate_density(rho);
    return {2.0 * rho(0, 1).real(), 2.0 * rho(0, 1).imag(), (rho(1, 1) - rho(0, 0)).real()};
}

QState2 state_of(const BlochVec &v) {
    if (!v.allFinite() || v.norm() > 1.0 + tol::kBlochNorm) {
        throw Error(ErrorCode::InvalidBloch, "Bloch vector norm exceeds 1");
    }
    QState2 rho;
    rho(0, 0) = 0.5 * (1.0 - v.z());
    rho(1, 1) = 0.5 * (1.0 + v.z());
    rho(0, 1) = 0.5 * Complex{v.x(), v.y()};
    rho(1, 0) = 0.5 * Complex{v.x(), -v.y()};
    return rho;
}

std::string_view to_string(DensityCheck check) noexcept {
    switch (check) {
    case DensityCheck::Ok:
        return "ok";
    case DensityCheck::Hermiticity:
        return "hermiticity";
    case DensityCheck::Trace:
        return "trace";
    case DensityCheck::Positivity:
        return "positivity";
    }
    return "unknown";
}

DensityCheck check_density(const CMat2 &rho) { return check_common(rho); }
DensityCheck check_density(const CMat4 &rho) { return check_common(rho); }

void validate_density(const CMat2 &rho) { throw_if_invalid(rho); }
void validate_density(const CMat4 &rho) { throw_if_invalid(rho); }

double min_eigenvalue(const CMat2 &op) {
    // Roots of the characteristic polynomial of the Hermitian part.
    const CMat2 h = 0.5 * (op + op.adjoint());
    const double half_trace = 0.5 * (h(0, 0).real() + h(1, 1).real());
    const double half_gap = 0.5 * (h(0, 0).real() - h(1, 1).real());
    return half_trace - std::hypot(half_gap, std::abs(h(0, 1)));
}

double min_eigenvalue(const CMat4 &op) {
    const CMat4 h = 0.5 * (op + op.adjoint());
    Eigen::SelfAdjointEigenSolver<CMat4> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double real_trace(const CMat2 &op) { return op.trace().real(); }
double real_trace(const CMat4 &op) { return op.trace().real(); }

double expectation(const CMat2 &observable, const CMat2 &rho) {
    return (observable * rho).trace().real();
}

double expectation(const CMat4 &observable, const CMat4 &rho) {
    return (observable * rho).trace().real();
}

CMat2 conjugate(const CMat2 &u, const CMat2 &rho) { return u * rho * u.adjoint(); }
CMat4 conjugate(const CMat4 &u, const CMat4 &rho) { return u * rho * u.adjoint(); }

CMat2 rotation_unitary(const BlochVec &axis, double angle) {
    const CMat2 generator = axis.x() * pauli::x() + axis.y() * pauli::y() + axis.z() * pauli::z();
    return std::cos(0.5 * angle) * pauli::identity() - kI * std::sin(0.5 * angle) * generator;
}

Rotation3 bloch_rotation(const CMat2 &u) {
    const CMat2 basis[3] = {pauli::x(), pauli::y(), pauli::z()};
    Rotation3 r;
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            r(j, k) = 0.5 * (basis[j] * u * basis[k] * u.adjoint()).trace().real();
        }
    }
    return r;
}

double max_abs(const CMat2 &op) { return op.cwiseAbs().maxCoeff(); }
double max_abs(const CMat4 &op) { return op.cwiseAbs().maxCoeff(); }

} // namespace szilard
