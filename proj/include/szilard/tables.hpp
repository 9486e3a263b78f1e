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
 * Tabular outputs behind the command-line tool. Each builder evaluates a grid
 * (optionally on a worker pool) and returns rows in grid order.
 */

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "szilard/bounds.hpp"
#include "szilard/shots.hpp"
#include "szilard/steering.hpp"

namespace szilard {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    /// Extra scalar results reported alongside the rows (e.g. a rank
    /// correlation).
    std::vector<std::pair<std::string, double>> summary;

    /// Throws NoConvergence if any row has the wrong width or a non-finite
    /// value.
    void validate() const;
};

enum class OutputFormat { Csv, Json };

/// Header row, shortest round-trip decimals, '\n' line ends.
std::string to_csv(const Table &table);
/// Array of row objects keyed by column name.
std::string to_json(const Table &table);
std::string format_table(const Table &table, OutputFormat format);

/// Shortest decimal that round-trips to the same double.
std::string format_number(double value);

/// Calls fn(0..count-1) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &fn);

/// Columns eta, dw_m1, dw_m2 with dw_mi = W(pure, D_i) - W(classical, D_i).
/// Sampled mode adds se_m1, se_m2.
Table fig3_table(const std::vector<double> &etas, const std::optional<ShotConfig> &sampled, unsigned threads = 1);

/// Columns eta, q, effective_eta, average_work, bound, violation.
Table fig4_map_table(Family family, const Strategy &strategy, const Grid &grid, unsigned threads = 1);

/// Columns eta, q_star: the zero crossing of the violation in q. Values of
/// eta without a crossing are omitted.
Table fig4_boundary_table(Family family, const Strategy &strategy, const std::vector<double> &etas,
                          unsigned threads = 1);

/// Columns eta, q, steering_violation, work_violation; summary holds
/// rank_correlation and settings.
Table scatter_table(Family family, const Strategy &strategy, const Grid &grid);

/// One row per support point of the oracle ensemble: eta, c1, c2, c3,
/// closed, oracle, gap, tight, weight, vx, vy, vz.
Table bound_table(const LhsBoundQuery &query, std::size_t resolution);

/// Exact: eta, q, effective_eta, work_d1, work_d2, work_d3, average_work,
/// bound, violation, steering_violation.
/// Sampled: eta, q, effective_eta, mean_work, standard_error, shots,
/// exact_work, bound.
Table sweep_table(Family family, const Strategy &strategy, const Grid &grid, const std::optional<ShotConfig> &sampled,
                  unsigned threads = 1);

/// Single sampled estimate: eta, q, effective_eta, shots, mean_work,
/// standard_error, exact_work.
Table sample_table(Family family, double eta, double q, const Strategy &strategy, const ShotConfig &config);

/// Seed for the k-th independent estimate derived from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k) noexcept;

} // namespace szilard
