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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcsmp/postprocess.hpp"
#include "pcsmp/sandwich.hpp"

namespace pcs {

struct CalibrationPoint {
    double p1 = 0.0;
    double expected_discard = 0.0;  // after the isotonic fit
    double raw_discard = 0.0;       // as simulated
    std::uint64_t shots = 0;
};

// Discard fraction as a function of depolarizing rate, non-decreasing in p1.
struct CalibrationCurve {
    std::vector<CalibrationPoint> points;
    std::string benchmark_label;
};

// Pool-adjacent-violators fit: the weighted least-squares non-decreasing
// sequence closest to `values`. Weights default to 1.
std::vector<double> isotonic_fit(const std::vector<double>& values, const std::vector<double>& weights = {});

// Simulates the transpiled benchmark at NoiseSpec::depolarizing(p) for every
// p in the strictly increasing grid, grid point i seeded with
// derive_seed(seed, "calibration", i), and isotonically smooths the discard
// fractions.
CalibrationCurve build_calibration_curve(const SandwichedCircuit& benchmark, const std::vector<double>& p_grid,
                                         std::uint64_t shots, std::uint64_t seed, std::size_t workers = 1);

struct CurveInversion {
    double p = 0.0;
    bool saturated = false;
};

// Piecewise-linear inverse of the curve. Values at or below the lowest
// level clamp to the first grid rate, values above the highest level to the
// last; both are flagged saturated. On a flat stretch the lowest rate wins.
// Throws CalibrationError when the curve has fewer than two distinct levels.
CurveInversion invert_curve(const CalibrationCurve& curve, double d);

struct NoiseEstimate {
    std::size_t region_id = 0;
    double d_observed = 0.0;
    double p_estimated = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    bool saturated = false;
};

// 95% Wilson score interval for k successes in n trials.
std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n, double z = 1.959963984540054);

std::vector<NoiseEstimate> estimate_noise_map(const std::vector<ThreadResult>& results, const CalibrationCurve& curve);

nlohmann::json calibration_to_json(const CalibrationCurve& curve);
nlohmann::json estimate_to_json(const NoiseEstimate& e);

}  // namespace pcs
