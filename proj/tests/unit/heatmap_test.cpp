// Copyright 2026 The pcsmp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pcsmp/heatmap.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "pcsmp/benchmarks.hpp"
#include "pcsmp/errors.hpp"
#include "pcsmp/multiprogram.hpp"
#include "pcsmp/stats.hpp"

namespace pcs {
namespace {

namespace fs = std::filesystem;

std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
    std::ifstream in(path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

std::vector<double> flatten(const std::vector<std::vector<std::string>>& rows) {
    std::vector<double> out;
    for (const auto& r : rows) {
        for (const auto& c : r) {
            out.push_back(std::stod(c));
        }
    }
    return out;
}

class HeatmapTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("pcsmp_heatmap_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path dir_;
};

std::vector<NoiseEstimate> fake_estimates(const QpuModel& q) {
    std::vector<NoiseEstimate> out;
    for (const auto& r : q.regions()) {
        out.push_back({r.id, 10.0 * r.noise.p1, r.noise.p1, r.noise.p1, r.noise.p1, false});
    }
    return out;
}

TEST_F(HeatmapTest, SixtyRegionsGiveSixByTen) {
    const auto q = make_linear_sweep_qpu(60, 10, 0.0005, 0.03);
    const auto files = export_heatmap(fake_estimates(q), q, dir_);
    for (const auto& path : {files.discard_csv, files.estimate_csv, files.ground_truth_csv}) {
        const auto rows = read_csv(path);
        ASSERT_EQ(rows.size(), 6u) << path;
        for (const auto& r : rows) {
            EXPECT_EQ(r.size(), 10u);
        }
    }
    const auto truth = flatten(read_csv(files.ground_truth_csv));
    EXPECT_DOUBLE_EQ(truth[0], 0.0005);
    EXPECT_DOUBLE_EQ(truth[59], 0.03);
    std::ifstream in(files.estimates_json);
    const auto j = nlohmann::json::parse(in);
    ASSERT_EQ(j.size(), 60u);
    for (const char* key : {"region_id", "d", "p_est", "ci", "saturated"}) {
        EXPECT_TRUE(j[0].contains(key)) << key;
    }
}

TEST_F(HeatmapTest, MissingRegionsAreNan) {
    const auto q = make_linear_sweep_qpu(4, 10, 0.001, 0.004);
    auto est = fake_estimates(q);
    est.erase(est.begin() + 1);
    const auto files = export_heatmap(est, q, dir_);
    const auto rows = read_csv(files.discard_csv);
    EXPECT_EQ(rows[0][1], "nan");
}

TEST_F(HeatmapTest, UniformNoiseGivesFlatHeatmap) {
    const auto q = make_qpu_from_rates(std::vector<double>(12, 0.01), 10);
    const auto b = ghz_mirror_benchmark(8);
    const auto s = sandwich(b, auto_edge_checks(b.payload));
    const auto threads = process_threads(run_multiprogram(q, s, 10000, 2), s.check_bits);
    std::vector<NoiseEstimate> est;
    double mean = 0.0;
    for (const auto& t : threads) {
        est.push_back({t.region_id, t.discard_fraction, 0.01, 0.01, 0.01, false});
        mean += t.discard_fraction / 12.0;
    }
    const auto files = export_heatmap(est, q, dir_);
    const double sigma = std::sqrt(mean * (1.0 - mean) / 10000.0);
    for (double d : flatten(read_csv(files.discard_csv))) {
        EXPECT_LE(std::abs(d - mean), 4.0 * sigma);
    }
}

TEST_F(HeatmapTest, PermutedSweepTracksPermutedTruth) {
    const auto q = make_linear_sweep_qpu(20, 10, 0.0005, 0.03).permuted(5);
    const auto b = ghz_mirror_benchmark(8);
    const auto s = sandwich(b, auto_edge_checks(b.payload));
    const auto threads = process_threads(run_multiprogram(q, s, 10000, 3), s.check_bits);
    std::vector<NoiseEstimate> est;
    for (const auto& t : threads) {
        est.push_back({t.region_id, t.discard_fraction, 0.0, 0.0, 0.0, false});
    }
    const auto files = export_heatmap(est, q, dir_);
    const auto d = flatten(read_csv(files.discard_csv));
    const auto truth = flatten(read_csv(files.ground_truth_csv));
    EXPECT_GE(spearman(d, truth), 0.95);
}

TEST_F(HeatmapTest, ErrorPaths) {
    EXPECT_THROW(grid_csv({1, 2, 3}, GridShape{2, 2}), ShapeError);
    const auto q = make_linear_sweep_qpu(2, 10, 0.001, 0.002);
    std::vector<NoiseEstimate> bad{{5, 0.1, 0.1, 0.1, 0.1, false}};
    EXPECT_THROW(export_heatmap(bad, q, dir_), ShapeError);
    fs::create_directories(dir_);
    std::ofstream(dir_ / "file") << "x";
    EXPECT_THROW(export_heatmap(fake_estimates(q), q, dir_ / "file" / "sub"), Error);
}

TEST(GridCsvTest, RowMajorLayout) {
    EXPECT_EQ(grid_csv({1, 2, 3, 4, 5, 6}, GridShape{2, 3}), "1,2,3\n4,5,6\n");
}

}  // namespace
}  // namespace pcs
