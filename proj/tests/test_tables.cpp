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
#include <limits>

#include <gtest/gtest.h>

#include "szilard/tables.hpp"
#include "test_support.hpp"

namespace szilard {
namespace {

using testing::expect_error;

TEST(Fig3, Rows) {
    const Table t = fig3_table({0.0, 0.6, 1.0}, std::nullopt);
    ASSERT_EQ(t.columns, (std::vector<std::string>{"eta", "dw_m1", "dw_m2"}));
    ASSERT_EQ(t.rows.size(), 3u);
    EXPECT_NEAR(t.rows[0][1], 0.0, 1e-12);
    EXPECT_NEAR(t.rows[0][2], 0.5, 1e-12);
    EXPECT_NEAR(t.rows[1][1], 0.0, 1e-12);
    EXPECT_NEAR(t.rows[1][2], 0.32, 1e-12);
    EXPECT_NEAR(t.rows[2][1], 0.0, 1e-12);
    EXPECT_NEAR(t.rows[2][2], 0.0, 1e-12);
}

TEST(Fig3, SampledColumns) {
    ShotConfig config;
    config.shots_per_setting = 40000;
    const Table t = fig3_table({0.0}, config);
    ASSERT_EQ(t.columns.size(), 5u);
    EXPECT_LT(std::abs(t.rows[0][2] - 0.5), 4.0 * t.rows[0][4]);
}

TEST(Fig4, MapAndBoundary) {
    const Grid grid{{0.0, 0.5}, {0.0, 1.0}};
    const Table map = fig4_map_table(Family::Werner, Strategy::uniform3(), grid);
    ASSERT_EQ(map.rows.size(), 4u);
    EXPECT_EQ(map.columns.back(), "violation");
    // eta = 0.5, q = 1.0: pure state.
    EXPECT_NEAR(map.rows[3][3], 0.75, 1e-12);

    const Table boundary = fig4_boundary_table(Family::Werner, Strategy::uniform2(), {0.0});
    ASSERT_EQ(boundary.rows.size(), 1u);
    EXPECT_NEAR(boundary.rows[0][1], 1.0 / std::sqrt(2.0), 1e-9);

    const Table none = fig4_boundary_table(Family::GibbsInvariant, Strategy::single(1), {0.0, 0.3});
    EXPECT_TRUE(none.rows.empty());
}

TEST(Tables, ThreadCountDoesNotChangeRows) {
    const Grid grid{linspace(-0.8, 0.8, 7), linspace(0.0, 1.0, 5)};
    const Table one = sweep_table(Family::GibbsInvariant, Strategy::uniform3(), grid, std::nullopt, 1);
    const Table four = sweep_table(Family::GibbsInvariant, Strategy::uniform3(), grid, std::nullopt, 4);
    EXPECT_EQ(one.rows, four.rows);

    ShotConfig config;
    config.shots_per_setting = 3000;
    config.rng_seed = 5;
    const Table s1 = sweep_table(Family::Werner, Strategy::uniform2(), grid, config, 1);
    const Table s4 = sweep_table(Family::Werner, Strategy::uniform2(), grid, config, 4);
    EXPECT_EQ(s1.rows, s4.rows);
}

TEST(Tables, BoundTableSummary) {
    const Table t = bound_table({0.0, Strategy::uniform3()}, 2000);
    EXPECT_FALSE(t.rows.empty());
    EXPECT_LE(t.rows.size(), 4u);
    bool found = false;
    for (const auto &[key, value] : t.summary) {
        if (key == "oracle") {
            found = true;
            EXPECT_NEAR(value, 1.0 / (2.0 * std::sqrt(3.0)), 5e-3);
        }
    }
    EXPECT_TRUE(found);
}

TEST(Format, CsvRoundTrip) {
    Table t;
    t.columns = {"a", "b"};
    t.rows = {{0.1, -2.0}, {1.0 / 3.0, 1e-20}};
    const std::string csv = to_csv(t);
    EXPECT_EQ(csv, "a,b\n0.1,-2\n0.3333333333333333,1e-20\n");
    EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Format, Json) {
    Table t;
    t.columns = {"eta", "q"};
    t.rows = {{0.5, 1.0}};
    const std::string json = to_json(t);
    EXPECT_NE(json.find("\"eta\": 0.5"), std::string::npos);
    EXPECT_NE(json.find("\"q\": 1.0"), std::string::npos);
    EXPECT_EQ(format_table(t, OutputFormat::Json), json);
}

TEST(Tables, ValidateRejectsNonFinite) {
    Table t;
    t.columns = {"a"};
    t.rows = {{std::numeric_limits<double>::quiet_NaN()}};
    expect_error(ErrorCode::NoConvergence, [&] { t.validate(); });
    t.rows = {{1.0, 2.0}};
    expect_error(ErrorCode::NoConvergence, [&] { t.validate(); });
}

TEST(ParallelFor, PropagatesException) {
    EXPECT_THROW(parallel_for(10, 3,
                              [](std::size_t k) {
                                  if (k == 7) {
                                      throw Error(ErrorCode::NoConvergence, "x");
                                  }
                              }),
                 Error);
}

} // namespace
} // namespace szilard
