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

#include "szilard/simplex.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "szilard/error.hpp"

namespace szilard {

namespace {

constexpr int kRows = 4;
constexpr double kTieTolerance = 1e-14;
constexpr double kFeasibilityTolerance = 1e-9;

class RevisedSimplex {
  public:
    RevisedSimplex(const LpMatrix &a, std::span<const double> cost, const Eigen::Vector4d &b,
                   const SimplexOptions &options)
        : a_(a), b_(b), cost_(cost), options_(options), columns_(static_cast<std::size_t>(a.cols())) {
        // Phase one starts from the all-artificial basis, which needs b >= 0.
        for (int r = 0; r < kRows; ++r) {
            if (b_(r) < 0.0) {
                b_(r) = -b_(r);
                a_.row(r) *= -1.0;
            }
        }
        for (int r = 0; r < kRows; ++r) {
            basis_[static_cast<std::size_t>(r)] = columns_ + static_cast<std::size_t>(r);
        }
        refactor();
    }

    LpSolution solve() {
        iterate([this](std::size_t j) { return j < columns_ ? 0.0 : -1.0; });

        double infeasibility = 0.0;
        for (int r = 0; r < kRows; ++r) {
            if (is_artificial(basis_[static_cast<std::size_t>(r)])) {
                infeasibility += xb_(r);
            }
        }
        if (infeasibility > kFeasibilityTolerance) {
            throw Error(ErrorCode::InfeasibleConstraint,
                        "phase one ended with infeasibility " + std::to_string(infeasibility));
        }
        drive_out_artificials();

        iterate([this](std::size_t j) { return j < columns_ ? cost_[j] : 0.0; });

        LpSolution solution;
        solution.iterations = iterations_;
        for (int r = 0; r < kRows; ++r) {
            const std::size_t j = basis_[static_cast<std::size_t>(r)];
            if (is_artificial(j) || xb_(r) <= 0.0) {
                continue;
            }
            solution.basics.push_back({j, xb_(r)});
            solution.objective += cost_[j] * xb_(r);
        }
        std::sort(solution.basics.begin(), solution.basics.end(),
                  [](const LpBasic &l, const LpBasic &r) { return l.column < r.column; });
        return solution;
    }

  private:
    [[nodiscard]] bool is_artificial(std::size_t j) const noexcept { return j >= columns_; }

    [[nodiscard]] Eigen::Vector4d column(std::size_t j) const {
        if (is_artificial(j)) {
            return Eigen::Vector4d::Unit(static_cast<Eigen::Index>(j - columns_));
        }
        return a_.col(static_cast<Eigen::Index>(j));
    }

    void refactor() {
        Eigen::Matrix4d basis_matrix;
        for (int r = 0; r < kRows; ++r) {
            basis_matrix.col(r) = column(basis_[static_cast<std::size_t>(r)]);
        }
        const Eigen::FullPivLU<Eigen::Matrix4d> lu(basis_matrix);
        if (!lu.isInvertible()) {
            throw Error(ErrorCode::NoConvergence, "simplex basis became singular");
        }
        binv_ = lu.inverse();
        xb_ = binv_ * b_;
        for (int r = 0; r < kRows; ++r) {
            if (xb_(r) < 0.0 && xb_(r) > -kFeasibilityTolerance) {
                xb_(r) = 0.0;
            }
        }
    }

    template <typename CostFn> void iterate(CostFn cost_of) {
        bool bland = false;
        while (true) {
            if (iterations_ >= options_.max_iterations) {
                throw Error(ErrorCode::NoConvergence,
                            "simplex hit the iteration cap of " + std::to_string(options_.max_iterations));
            }

            Eigen::Vector4d basic_cost;
            for (int r = 0; r < kRows; ++r) {
                basic_cost(r) = cost_of(basis_[static_cast<std::size_t>(r)]);
            }
            const Eigen::Vector4d duals = binv_.transpose() * basic_cost;

            std::size_t entering = columns_;
            double best = options_.reduced_cost_tolerance;
            for (std::size_t j = 0; j < columns_; ++j) {
                const double reduced = cost_of(j) - duals.dot(a_.col(static_cast<Eigen::Index>(j)));
                if (reduced > best) {
                    entering = j;
                    if (bland) {
                        break;
                    }
                    best = reduced;
                }
            }
            if (entering == columns_) {
                return;
            }

            const Eigen::Vector4d direction = binv_ * column(entering);
            int leaving = -1;
            double step = std::numeric_limits<double>::infinity();
            for (int r = 0; r < kRows; ++r) {
                if (direction(r) <= options_.pivot_tolerance) {
                    continue;
                }
                const double ratio = xb_(r) / direction(r);
                const bool tie = std::abs(ratio - step) <= kTieTolerance;
                if (leaving < 0 || (!tie && ratio < step) ||
                    (tie && basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leaving)])) {
                    leaving = r;
                    step = std::min(step, ratio);
                }
            }
            if (leaving < 0) {
                throw Error(ErrorCode::NoConvergence, "linear program is unbounded");
            }

            bland = step <= kTieTolerance;
            basis_[static_cast<std::size_t>(leaving)] = entering;
            refactor();
            ++iterations_;
        }
    }

    // Degenerate pivots that replace artificials left at zero level.
    void drive_out_artificials() {
        for (int r = 0; r < kRows; ++r) {
            if (!is_artificial(basis_[static_cast<std::size_t>(r)])) {
                continue;
            }
            const Eigen::RowVector4d row = binv_.row(r);
            for (std::size_t j = 0; j < columns_; ++j) {
                if (std::find(basis_.begin(), basis_.end(), j) != basis_.end()) {
                    continue;
                }
                if (std::abs(row.dot(a_.col(static_cast<Eigen::Index>(j)))) > 1e-9) {
                    basis_[static_cast<std::size_t>(r)] = j;
                    refactor();
                    ++iterations_;
                    break;
                }
            }
        }
    }

    LpMatrix a_;
    Eigen::Vector4d b_;
    std::span<const double> cost_;
    SimplexOptions options_;
    std::size_t columns_;
    std::array<std::size_t, kRows> basis_{};
    Eigen::Matrix4d binv_;
    Eigen::Vector4d xb_;
    std::size_t iterations_ = 0;
};

} // namespace

LpSolution maximize(const LpMatrix &a, std::span<const double> cost, const Eigen::Vector4d &b,
                    const SimplexOptions &options) {
    if (static_cast<std::size_t>(a.cols()) != cost.size()) {
        throw Error(ErrorCode::InvalidParam, "cost vector length does not match column count");
    }
    if (a.cols() == 0) {
        throw Error(ErrorCode::InfeasibleConstraint, "linear program has no columns");
    }
    return RevisedSimplex(a, cost, b, options).solve();
}

} // namespace szilard
