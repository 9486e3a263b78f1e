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

#include "szilard/tables.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "json.hpp"

#include "szilard/error.hpp"

namespace szilard {

namespace {

std::vector<std::pair<double, double>> grid_points(const Grid &grid) {
    if (grid.etas.empty() || grid.qs.empty()) {
        throw Error(ErrorCode::InvalidParam, "grid is empty");
    }
    std::vector<std::pair<double, double>> points;
    points.reserve(grid.etas.size() * grid.qs.size());
    for (double eta : grid.etas) {
        for (double q : grid.qs) {
            points.emplace_back(eta, q);
        }
    }
    return points;
}

std::vector<double> strategy_columns(const Strategy &s) { return {s.weight(1), s.weight(2), s.weight(3)}; }

} // namespace

void Table::validate() const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != columns.size()) {
            throw Error(ErrorCode::NoConvergence, "row " + std::to_string(r) + " has the wrong number of columns");
        }
        for (double v : rows[r]) {
            if (!std::isfinite(v)) {
                throw Error(ErrorCode::NoConvergence, "row " + std::to_string(r) + " has a non-finite value");
            }
        }
    }
    for (const auto &[key, value] : summary) {
        if (!std::isfinite(value)) {
            throw Error(ErrorCode::NoConvergence, "summary value " + key + " is not finite");
        }
    }
}

std::string format_number(double value) {
    char buffer[64];
    const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return {buffer, result.ptr};
}

std::string to_csv(const Table &table) {
    std::string out;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        out += (c ? "," : "") + table.columns[c];
    }
    out += '\n';
    for (const auto &row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) {
                out += ',';
            }
            out += format_number(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table &table) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto &row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) {
            obj[table.columns[c]] = row[c];
        }
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

std::string format_table(const Table &table, OutputFormat format) {
    return format == OutputFormat::Csv ? to_csv(table) : to_json(table);
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &fn) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
    if (workers <= 1) {
        for (std::size_t k = 0; k < count; ++k) {
            fn(k);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < count; k = next++) {
                    try {
                        fn(k);
                    } catch (...) {
                        const std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k) noexcept {
    // splitmix64 finalizer
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (k + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Table fig3_table(const std::vector<double> &etas, const std::optional<ShotConfig> &sampled, unsigned threads) {
    Table table;
    table.columns = {"eta", "dw_m1", "dw_m2"};
    if (sampled) {
        table.columns.insert(table.columns.end(), {"se_m1", "se_m2"});
    }
    table.rows.resize(etas.size());
    parallel_for(etas.size(), threads, [&](std::size_t k) {
        const double eta = etas[k];
        const QState4 quantum = pure_entangled(eta);
        const QState4 classical = classical_correlated(eta);
        std::vector<double> row{eta};
        std::vector<double> errors;
        for (int i = 1; i <= 2; ++i) {
            const Decomposition d = make_decomposition(i, eta);
            if (!sampled) {
                row.push_back(run_protocol(quantum, d).average_work - run_protocol(classical, d).average_work);
                continue;
            }
            ShotConfig q_cfg = *sampled;
            ShotConfig c_cfg = *sampled;
            q_cfg.rng_seed = derive_seed(sampled->rng_seed, 4 * k + 2 * static_cast<std::size_t>(i - 1));
            c_cfg.rng_seed = derive_seed(sampled->rng_seed, 4 * k + 2 * static_cast<std::size_t>(i - 1) + 1);
            const WorkEstimate wq = sample_run(quantum, d, q_cfg);
            const WorkEstimate wc = sample_run(classical, d, c_cfg);
            row.push_back(wq.mean - wc.mean);
            errors.push_back(std::hypot(wq.standard_error, wc.standard_error));
        }
        row.insert(row.end(), errors.begin(), errors.end());
        table.rows[k] = std::move(row);
    });
    table.validate();
    return table;
}

Table fig4_map_table(Family family, const Strategy &strategy, const Grid &grid, unsigned threads) {
    const auto points = grid_points(grid);
    Table table;
    table.columns = {"eta", "q", "effective_eta", "average_work", "bound", "violation"};
    table.rows.resize(points.size());
    parallel_for(points.size(), threads, [&](std::size_t k) {
        const auto [eta, q] = points[k];
        const QState4 rho = make_state(family, eta, q);
        const double eff = effective_eta(rho);
        const double work = average_work(rho, strategy);
        const double bound = lhs_bound_closed({eff, strategy});
        table.rows[k] = {eta, q, eff, work, bound, work - bound};
    });
    table.validate();
    return table;
}

Table fig4_boundary_table(Family family, const Strategy &strategy, const std::vector<double> &etas, unsigned threads) {
    std::vector<std::optional<double>> crossings(etas.size());
    parallel_for(etas.size(), threads, [&](std::size_t k) {
        try {
            crossings[k] = violation_boundary(family, strategy, etas[k]);
        } catch (const Error &e) {
            if (e.code() != ErrorCode::NoCrossing) {
                throw;
            }
        }
    });
    Table table;
    table.columns = {"eta", "q_star"};
    for (std::size_t k = 0; k < etas.size(); ++k) {
        if (crossings[k]) {
            table.rows.push_back({etas[k], *crossings[k]});
        }
    }
    table.validate();
    return table;
}

Table scatter_table(Family family, const Strategy &strategy, const Grid &grid) {
    const ScatterResult scatter = correlation_scatter(family, strategy, grid);
    Table table;
    table.columns = {"eta", "q", "steering_violation", "work_violation"};
    for (const ScatterPoint &p : scatter.points) {
        table.rows.push_back({p.eta, p.q, p.steering_violation, p.work_violation});
    }
    table.summary = {{"rank_correlation", scatter.rank_correlation},
                     {"settings", static_cast<double>(scatter.settings)}};
    table.validate();
    return table;
}

Table bound_table(const LhsBoundQuery &query, std::size_t resolution) {
    const double closed = lhs_bound_closed(query);
    const OracleResult oracle = lhs_bound_oracle(query, resolution);
    Table table;
    table.columns = {"eta", "c1", "c2", "c3", "closed", "oracle", "gap", "tight", "weight", "vx", "vy", "vz"};
    const std::vector<double> c = strategy_columns(query.strategy);
    for (const HiddenState &h : oracle.ensemble.support) {
        table.rows.push_back({query.eta, c[0], c[1], c[2], closed, oracle.value, closed - oracle.value,
                              closed_bound_is_tight(query) ? 1.0 : 0.0, h.weight, h.direction.x(), h.direction.y(),
                              h.direction.z()});
    }
    table.summary = {{"closed", closed},
                     {"oracle", oracle.value},
                     {"gap", closed - oracle.value},
                     {"sphere_points", static_cast<double>(oracle.sphere_points)},
                     {"iterations", static_cast<double>(oracle.iterations)}};
    table.validate();
    return table;
}

Table sweep_table(Family family, const Strategy &strategy, const Grid &grid, const std::optional<ShotConfig> &sampled,
                  unsigned threads) {
    const auto points = grid_points(grid);
    Table table;
    if (sampled) {
        table.columns = {"eta", "q", "effective_eta", "mean_work", "standard_error", "shots", "exact_work", "bound"};
    } else {
        table.columns = {"eta",          "q",     "effective_eta", "work_d1", "work_d2", "work_d3",
                         "average_work", "bound", "violation",     "steering_violation"};
    }
    table.rows.resize(points.size());
    const int settings = std::max(2, strategy.support_size());
    parallel_for(points.size(), threads, [&](std::size_t k) {
        const auto [eta, q] = points[k];
        const QState4 rho = make_state(family, eta, q);
        const double eff = effective_eta(rho);
        const double bound = lhs_bound_closed({eff, strategy});
        const double exact = average_work(rho, strategy);
        if (sampled) {
            ShotConfig cfg = *sampled;
            cfg.rng_seed = derive_seed(sampled->rng_seed, k);
            const WorkEstimate est = sample_average_work(rho, strategy, cfg);
            table.rows[k] = {eta, q, eff, est.mean, est.standard_error, static_cast<double>(est.shots), exact, bound};
        } else {
            const auto works = decomposition_works(rho);
            table.rows[k] = {eta,   q,     eff,           works[0], works[1], works[2],
                             exact, bound, exact - bound, linear_steering(rho, settings).violation};
        }
    });
    table.validate();
    return table;
}

Table sample_table(Family family, double eta, double q, const Strategy &strategy, const ShotConfig &config) {
    const QState4 rho = make_state(family, eta, q);
    const WorkEstimate est = sample_average_work(rho, strategy, config);
    Table table;
    table.columns = {"eta", "q", "effective_eta", "shots", "mean_work", "standard_error", "exact_work"};
    table.rows.push_back({eta, q, effective_eta(rho), static_cast<double>(est.shots), est.mean, est.standard_error,
                          average_work(rho, strategy)});
    table.validate();
    return table;
}

} // namespace szilard
