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


// szilard: parameter sweeps and figure data for the correlated-bath engine.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "szilard/bounds.hpp"
#include "szilard/error.hpp"
#include "szilard/shots.hpp"
#include "szilard/states.hpp"
#include "szilard/steering.hpp"
#include "szilard/tables.hpp"

namespace {

using namespace szilard;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitNumerical = 3;

struct Options {
    std::string family = "werner";
    double eta_min = -0.9;
    double eta_max = 0.9;
    std::size_t eta_steps = 19;
    double q_min = 0.0;
    double q_max = 1.0;
    std::size_t q_steps = 11;
    double eta = 0.0;
    double q = 1.0;
    std::string c1 = "1/3";
    std::string c2 = "1/3";
    std::string c3 = "1/3";
    std::string mode = "exact";
    std::uint64_t shots = 10000;
    std::uint64_t seed = 0;
    double readout_fidelity = 1.0;
    std::size_t resolution = 20000;
    std::string format = "csv";
    std::string out;
    unsigned threads = 1;
    bool boundary = false;
};

// Accepts a decimal number or a fraction such as 1/3.
double parse_weight(const std::string &text) {
    auto number = [&](std::string_view s) {
        double value = 0.0;
        const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || end != s.data() + s.size()) {
            throw Error(ErrorCode::InvalidStrategy, "cannot parse strategy weight '" + text + "'");
        }
        return value;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return number(text);
    }
    return number(std::string_view(text).substr(0, slash)) / number(std::string_view(text).substr(slash + 1));
}

Family family_of(const Options &o) {
    const auto f = parse_family(o.family);
    if (!f) {
        throw Error(ErrorCode::InvalidParam, "unknown family '" + o.family + "'");
    }
    return *f;
}

Strategy strategy_of(const Options &o) { return Strategy(parse_weight(o.c1), parse_weight(o.c2), parse_weight(o.c3)); }

std::vector<double> eta_grid(const Options &o) {
    if (o.eta_steps < 1 || o.eta_min < -1.0 || o.eta_max > 1.0 || o.eta_min > o.eta_max) {
        throw Error(ErrorCode::InvalidParam, "eta grid must be nonempty and inside [-1, 1]");
    }
    return linspace(o.eta_min, o.eta_max, o.eta_steps);
}

Grid grid_of(const Options &o) {
    if (o.q_steps < 1 || o.q_min < 0.0 || o.q_max > 1.0 || o.q_min > o.q_max) {
        throw Error(ErrorCode::InvalidParam, "q grid must be nonempty and inside [0, 1]");
    }
    return {eta_grid(o), linspace(o.q_min, o.q_max, o.q_steps)};
}

ShotConfig shots_of(const Options &o) {
    ShotConfig config;
    config.shots_per_setting = o.shots;
    config.rng_seed = o.seed;
    config.readout_fidelity = o.readout_fidelity;
    config.workers = o.threads;
    config.validate();
    return config;
}

std::optional<ShotConfig> sampled_of(const Options &o) {
    if (o.mode == "exact") {
        return std::nullopt;
    }
    return shots_of(o);
}

void emit(const Table &table, const Options &o) {
    table.validate();
    const std::string text = format_table(table, o.format == "json" ? OutputFormat::Json : OutputFormat::Csv);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file || !(file << text)) {
            throw Error(ErrorCode::InvalidConfig, "cannot write " + o.out);
        }
    }
    for (const auto &[key, value] : table.summary) {
        std::cerr << "# " << key << '=' << format_number(value) << '\n';
    }
}

} // namespace

int main(int argc, char **argv) {
    Options o;
    CLI::App app{"Correlated-bath quantum Szilard engine: work, bounds, steering and shot emulation."};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Key=value file mirroring the flags")->envname("SZILARD_CONFIG");

    app.add_option("--family", o.family, "pure | classical | gibbs-invariant | werner")->capture_default_str();
    app.add_option("--eta-min", o.eta_min)->capture_default_str();
    app.add_option("--eta-max", o.eta_max)->capture_default_str();
    app.add_option("--eta-steps", o.eta_steps)->capture_default_str();
    app.add_option("--q-min", o.q_min)->capture_default_str();
    app.add_option("--q-max", o.q_max)->capture_default_str();
    app.add_option("--q-steps", o.q_steps)->capture_default_str();
    app.add_option("--eta", o.eta, "Single eta for bound and sample")->capture_default_str();
    app.add_option("--q", o.q, "Single q for sample")->capture_default_str();
    app.add_option("--c1", o.c1, "Weight of D1 (decimal or fraction)")->capture_default_str();
    app.add_option("--c2", o.c2, "Weight of D2")->capture_default_str();
    app.add_option("--c3", o.c3, "Weight of D3")->capture_default_str();
    app.add_option("--mode", o.mode)->check(CLI::IsMember({"exact", "sampled"}))->capture_default_str();
    app.add_option("--shots", o.shots, "Shots per setting")->capture_default_str();
    app.add_option("--seed", o.seed)->capture_default_str();
    app.add_option("--readout-fidelity", o.readout_fidelity)->capture_default_str();
    app.add_option("--resolution", o.resolution, "Sphere points for the LP oracle")->capture_default_str();
    app.add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--out", o.out, "Output path (default stdout)");
    app.add_option("--threads", o.threads)->check(CLI::PositiveNumber)->capture_default_str();

    auto *fig3 = app.add_subcommand("fig3", "Work difference between quantum and classical states under D1, D2");
    auto *map = app.add_subcommand("fig4-map", "Average work, bound and violation over the (eta, q) grid");
    map->add_flag("--boundary", o.boundary, "Emit the bisected q* per eta instead of the map");
    auto *scatter = app.add_subcommand("fig4-scatter", "Steering violation against work violation");
    auto *bound = app.add_subcommand("bound", "Closed-form bound against the LP oracle at one eta");
    auto *sweep = app.add_subcommand("sweep", "Per-decomposition work, bound and steering over the grid");
    auto *sample = app.add_subcommand("sample", "Finite-shot estimate at one (eta, q)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (fig3->parsed()) {
            emit(fig3_table(eta_grid(o), sampled_of(o), o.threads), o);
        } else if (map->parsed()) {
            const Family family = family_of(o);
            const Strategy strategy = strategy_of(o);
            emit(o.boundary ? fig4_boundary_table(family, strategy, eta_grid(o), o.threads)
                            : fig4_map_table(family, strategy, grid_of(o), o.threads),
                 o);
        } else if (scatter->parsed()) {
            emit(scatter_table(family_of(o), strategy_of(o), grid_of(o)), o);
        } else if (bound->parsed()) {
            emit(bound_table({o.eta, strategy_of(o)}, o.resolution), o);
        } else if (sweep->parsed()) {
            emit(sweep_table(family_of(o), strategy_of(o), grid_of(o), sampled_of(o), o.threads), o);
        } else if (sample->parsed()) {
            emit(sample_table(family_of(o), o.eta, o.q, strategy_of(o), shots_of(o)), o);
        }
    } catch (const Error &e) {
        std::cerr << "szilard: " << e.what() << '\n';
        return e.is_numerical() ? kExitNumerical : kExitInvalid;
    }
    return kExitOk;
}
