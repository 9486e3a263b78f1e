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

#include "szilard/shots.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "szilard/error.hpp"
#include "szilard/states.hpp"

namespace szilard {

namespace {

struct Counts {
    std::uint64_t initial_ones = 0;
    std::uint64_t final_ones = 0;
};

struct ShotModel {
    double plus_probability;
    double plus_excited;
    double minus_excited;
    double initial_excited;
    double flip_probability;
};

std::mt19937_64 chunk_generator(std::uint64_t seed, std::uint32_t stream, std::uint64_t chunk) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream,
                      static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
    return std::mt19937_64(seq);
}

Counts run_chunk(const ShotModel &model, std::uint64_t seed, std::uint32_t stream, std::uint64_t chunk,
                 std::uint64_t shots) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto readout = [&](std::mt19937_64 &gen, double excited) -> std::uint64_t {
        bool one = unit(gen) < excited;
        if (model.flip_probability > 0.0 && unit(gen) < model.flip_probability) {
            one = !one;
        }
        return one ? 1 : 0;
    };

    Counts counts;
    std::mt19937_64 final_gen = chunk_generator(seed, 2 * stream, chunk);
    std::mt19937_64 initial_gen = chunk_generator(seed, 2 * stream + 1, chunk);
    for (std::uint64_t k = 0; k < shots; ++k) {
        const bool plus = unit(final_gen) < model.plus_probability;
        counts.final_ones += readout(final_gen, plus ? model.plus_excited : model.minus_excited);
        counts.initial_ones += readout(initial_gen, model.initial_excited);
    }
    return counts;
}

Counts run_shots(const ShotModel &model, const ShotConfig &config, std::uint32_t stream) {
    const std::uint64_t shots = config.shots_per_setting;
    const std::uint64_t chunks = (shots + kShotChunk - 1) / kShotChunk;
    std::vector<Counts> per_chunk(chunks);

    auto work_on = [&](std::uint64_t first, std::uint64_t stride) {
        for (std::uint64_t c = first; c < chunks; c += stride) {
            const std::uint64_t n = std::min(kShotChunk, shots - c * kShotChunk);
            per_chunk[c] = run_chunk(model, config.rng_seed, stream, c, n);
        }
    };

    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, config.workers), chunks));
    if (workers <= 1) {
        work_on(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work_on, w, workers);
        }
    }

    Counts total;
    for (const Counts &c : per_chunk) {
        total.initial_ones += c.initial_ones;
        total.final_ones += c.final_ones;
    }
    return total;
}

// Unbiased variance of n Bernoulli readouts with k ones.
double bernoulli_variance(std::uint64_t ones, std::uint64_t n) {
    const double mean = static_cast<double>(ones) / static_cast<double>(n);
    return static_cast<double>(n) / static_cast<double>(n - 1) * mean * (1.0 - mean);
}

double excited_population(const Branch &b) { return b.post_state ? energy(*b.post_state) : 0.0; }

} // namespace

void ShotConfig::validate() const {
    if (shots_per_setting < 2) {
        throw Error(ErrorCode::InvalidConfig, "need at least 2 shots");
    }
    if (!(readout_fidelity > 0.5 && readout_fidelity <= 1.0)) {
        throw Error(ErrorCode::InvalidConfig, "readout fidelity must lie in (0.5, 1]");
    }
}

WorkEstimate sample_run(const QState4 &rho, const Decomposition &d, const ShotConfig &config) {
    config.validate();
    const EngineRun run = run_protocol(rho, d);

    ShotModel model{};
    model.plus_probability = run.plus.post_state ? run.plus.probability : 0.0;
    if (!run.minus.post_state) {
        model.plus_probability = 1.0;
    }
    model.plus_excited = excited_population(run.plus);
    model.minus_excited = excited_population(run.minus);
    model.initial_excited = run.initial_energy;
    model.flip_probability = 1.0 - config.readout_fidelity;

    const Counts counts = run_shots(model, config, static_cast<std::uint32_t>(d.index));
    const std::uint64_t n = config.shots_per_setting;

    WorkEstimate est;
    est.shots = n;
    est.initial_energy = static_cast<double>(counts.initial_ones) / static_cast<double>(n);
    est.final_energy = static_cast<double>(counts.final_ones) / static_cast<double>(n);
    est.final_variance = bernoulli_variance(counts.final_ones, n);
    est.mean = est.initial_energy - est.final_energy;
    const double initial_variance = bernoulli_variance(counts.initial_ones, n);
    est.standard_error = std::sqrt((initial_variance + est.final_variance) / static_cast<double>(n));
    return est;
}

WorkEstimate sample_average_work(const QState4 &rho, const Strategy &strategy, const ShotConfig &config) {
    config.validate();
    const std::uint64_t budget = config.shots_per_setting;
    const auto &c = strategy.weights();

    std::array<std::uint64_t, 3> allocation{};
    std::uint64_t assigned = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        allocation[i] = static_cast<std::uint64_t>(std::floor(c[i] * static_cast<double>(budget)));
        assigned += allocation[i];
    }
    const auto largest = static_cast<std::size_t>(std::distance(c.begin(), std::max_element(c.begin(), c.end())));
    allocation[largest] += budget - assigned;

    const double eta = effective_eta(rho);
    WorkEstimate combined;
    double variance = 0.0;
    double variance_final = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (c[i] <= 0.0) {
            continue;
        }
        if (allocation[i] < 2) {
            throw Error(ErrorCode::InvalidConfig, "shot budget too small for the strategy weights");
        }
        ShotConfig sub = config;
        sub.shots_per_setting = allocation[i];
        const WorkEstimate e = sample_run(rho, make_decomposition(static_cast<int>(i) + 1, eta), sub);
        combined.mean += c[i] * e.mean;
        combined.initial_energy += c[i] * e.initial_energy;
        combined.final_energy += c[i] * e.final_energy;
        variance += c[i] * c[i] * e.standard_error * e.standard_error;
        variance_final += c[i] * e.final_variance;
        combined.shots += e.shots;
    }
    combined.standard_error = std::sqrt(variance);
    combined.final_variance = variance_final;
    return combined;
}

} // namespace szilard
