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

#pragma once

#include <filesystem>
#include <vector>

#include "pcsmp/calibration.hpp"
#include "pcsmp/qpu.hpp"

namespace pcs {

struct HeatmapFiles {
    std::filesystem::path discard_csv;
    std::filesystem::path estimate_csv;
    std::filesystem::path ground_truth_csv;
    std::filesystem::path estimates_json;
};

// Writes grid-shaped CSVs (rows x cols, row-major by region id, one line per
// row) of d_observed, p_estimated and the true p1, plus the full estimate
// records as JSON. Cells of regions without an estimate read "nan".
// Throws pcs::Error naming the path on I/O failure.
HeatmapFiles export_heatmap(const std::vector<NoiseEstimate>& estimates, const QpuModel& qpu,
                            const std::filesystem::path& directory);

// Rows of the grid CSV format above, for callers that want the text.
std::string grid_csv(const std::vector<double>& values_by_region, GridShape grid);

}  // namespace pcs
