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
 * Dense operator algebra for one qubit (2x2) and a bath/medium qubit pair
 * (4x4).
 *
 * Conventions used everywhere in the library:
 *  - Computational index 0 is |0>, index 1 is |1>.
 *  - Pair operators are ordered bath (x) medium, so the pair index of
 *    |b m> is 2*b + m.
 *  - Bloch vectors use vz = p(|1>) - p(|0>), i.e. sigma_z |1> = +|1>. The
 *    Pauli matrices below are written in that convention and still obey
 *    sigma_x sigma_y = i sigma_z, so rotations built from them are
 *    right-handed.
 */

#pragma once

#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace szilard {

using Complex = std::complex<double>;
using CMat2 = Eigen::Matrix2cd;
using CMat4 = Eigen::Matrix4cd;
using BlochVec = Eigen::Vector3d;
using Rotation3 = Eigen::Matrix3d;

/// Density operators. These are plain matrices; functions that require a
/// valid state check it at entry.
using QState2 = CMat2;
using QState4 = CMat4;

namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kPositivity = 1e-10;
inline constexpr double kBlochNorm = 1e-9;
} // namespace tol

enum class Axis { X, Y, Z };

namespace pauli {
CMat2 identity();
CMat2 x();
CMat2 y();
CMat2 z();
CMat2 along(Axis axis);
} // namespace pauli

/// |0><0| and |1><1|.
CMat2 ground_projector();
CMat2 excited_projector();

CMat4 tensor(const CMat2 &bath, const CMat2 &medium);

/// Reduced medium state. Validates `rho` first.
QState2 partial_trace_bath(const QState4 &rho);
/// Reduced bath state. Validates `rho` first.
QState2 partial_trace_medium(const QState4 &rho);

/// Partial traces without validation, for unnormalized blocks.
CMat2 trace_out_bath(const CMat4 &op);
CMat2 trace_out_medium(const CMat4 &op);

BlochVec bloch_of(const QState2 &rho);
QState2 state_of(const BlochVec &v);

enum class DensityCheck { Ok, Hermiticity, Trace, Positivity };

std::string_view to_string(DensityCheck check) noexcept;

DensityCheck check_density(const CMat2 &rho);
DensityCheck check_density(const CMat4 &rho);

/// Throws Error(InvalidState) naming the failed check.
void validate_density(const CMat2 &rho);
void validate_density(const CMat4 &rho);

/// Smallest eigenvalue of the Hermitian part.
double min_eigenvalue(const CMat2 &op);
double min_eigenvalue(const CMat4 &op);

double real_trace(const CMat2 &op);
double real_trace(const CMat4 &op);

/// Re Tr(observable * rho).
double expectation(const CMat2 &observable, const CMat2 &rho);
double expectation(const CMat4 &observable, const CMat4 &rho);

CMat2 conjugate(const CMat2 &u, const CMat2 &rho);
CMat4 conjugate(const CMat4 &u, const CMat4 &rho);

/// exp(-i angle/2 axis.sigma); rotates Bloch vectors by `angle` about
/// `axis` counterclockwise (right hand rule). `axis` must be a unit vector.
CMat2 rotation_unitary(const BlochVec &axis, double angle);

/// SO(3) matrix R with bloch_of(u rho u^dag) = R bloch_of(rho).
Rotation3 bloch_rotation(const CMat2 &u);

double max_abs(const CMat2 &op);
double max_abs(const CMat4 &op);

} // namespace szilard
