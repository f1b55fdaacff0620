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
#include <fstream>
#include <limits>

#include <fmt/format.h>

#include "pcsmp/errors.hpp"

namespace pcs {

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(fmt::format("cannot open '{}' for writing", path.string()));
    }
    out << text;
    if (!out.flush()) {
        throw Error(fmt::format("failed writing '{}'", path.string()));
    }
}

}  // namespace

std::string grid_csv(const std::vector<double>& values_by_region, GridShape grid) {
    if (values_by_region.size() != grid.rows * grid.cols) {
        throw ShapeError(fmt::format("{} values do not fill a {}x{} grid", values_by_region.size(), grid.rows, grid.cols));
    }
    std::string out;
    for (std::size_t r = 0; r < grid.rows; ++r) {
        for (std::size_t c = 0; c < grid.cols; ++c) {
            const double v = values_by_region[r * grid.cols + c];
            if (c > 0) {
                out += ',';
            }
            out += std::isnan(v) ? std::string("nan") : fmt::format("{}", v);
        }
        out += '\n';
    }
    return out;
}

HeatmapFiles export_heatmap(const std::vector<NoiseEstimate>& estimates, const QpuModel& qpu,
                            const std::filesystem::path& directory) {
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) {
        throw Error(fmt::format("cannot create '{}': {}", directory.string(), ec.message()));
    }
    const std::size_t n = qpu.regions().size();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> discard(n, nan);
    std::vector<double> estimate(n, nan);
    std::vector<double> truth(n, nan);
    nlohmann::json records = nlohmann::json::array();
    for (const auto& e : estimates) {
        if (e.region_id >= n) {
            throw ShapeError(fmt::format("estimate for region {} but the QPU has {} regions", e.region_id, n));
        }
        discard[e.region_id] = e.d_observed;
        estimate[e.region_id] = e.p_estimated;
        records.push_back(estimate_to_json(e));
    }
    for (const auto& r : qpu.regions()) {
        truth[r.id] = r.noise.p1;
    }

    HeatmapFiles files{directory / "discard_heatmap.csv", directory / "p_estimated_heatmap.csv",
                       directory / "ground_truth_heatmap.csv", directory / "noise_estimates.json"};
    write_file(files.discard_csv, grid_csv(discard, qpu.grid()));
    write_file(files.estimate_csv, grid_csv(estimate, qpu.grid()));
    write_file(files.ground_truth_csv, grid_csv(truth, qpu.grid()));
    write_file(files.estimates_json, records.dump(2) + "\n");
    return files;
}

}  // namespace pcs
