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
 * Finite-shot emulation of the engine cycle.
 *
 * Each shot samples Alice's outcome, applies Bob's unitary and reads the
 * medium's energy (0 or 1) projectively, with an optional symmetric readout
 * flip. The initial energy is estimated from an equal number of readouts of
 * the untouched medium, so the work estimate is a difference of two
 * independent sample means.
 *
 * Shots are drawn in fixed-size chunks, each with its own generator seeded
 * from (seed, stream, chunk). Estimates therefore depend only on the
 * configuration and never on the worker count.
 */

#pragma once

#include <cstdint>

#include "szilard/engine.hpp"

namespace szilard {

struct ShotConfig {
    /// Shots per decomposition for sample_run; total budget for
    /// sample_average_work.
    std::uint64_t shots_per_setting = 10000;
    std::uint64_t rng_seed = 0;
    /// Probability a readout reports the true level, in (0.5, 1].
    double readout_fidelity = 1.0;
    unsigned workers = 1;

    /// Throws InvalidConfig.
    void validate() const;
};

struct WorkEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    std::uint64_t shots = 0;
    double initial_energy = 0.0;
    double final_energy = 0.0;
    /// Sample variance of the final-energy readouts.
    double final_variance = 0.0;
};

inline constexpr std::uint64_t kShotChunk = 4096;

WorkEstimate sample_run(const QState4 &rho, const Decomposition &d, const ShotConfig &config);

/// Splits the budget across decompositions in proportion to c_i (rounded
/// down, remainder to the largest weight) and combines the per-setting
/// estimates with the same weights.
WorkEstimate sample_average_work(const QState4 &rho, const Strategy &strategy, const ShotConfig &config);

} // namespace szilard
