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

#include "pcsmp/calibration.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "pcsmp/errors.hpp"
#include "pcsmp/parallel.hpp"
#include "pcsmp/seeding.hpp"
#include "pcsmp/transpile.hpp"
#include "pcsmp/trajectory.hpp"

namespace pcs {

std::vector<double> isotonic_fit(const std::vector<double>& values, const std::vector<double>& weights) {
    if (!weights.empty() && weights.size() != values.size()) {
        throw ShapeError("isotonic_fit: weights and values differ in length");
    }
    struct Block {
        double mean;
        double weight;
        std::size_t length;
    };
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < values.size(); ++i) {
        blocks.push_back({values[i], weights.empty() ? 1.0 : weights[i], 1});
        while (blocks.size() > 1 && blocks[blocks.size() - 2].mean > blocks.back().mean) {
            const Block top = blocks.back();
            blocks.pop_back();
            Block& prev = blocks.back();
            const double w = prev.weight + top.weight;
            prev.mean = (prev.mean * prev.weight + top.mean * top.weight) / w;
            prev.weight = w;
            prev.length += top.length;
        }
    }
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& b : blocks) {
        out.insert(out.end(), b.length, b.mean);
    }
    return out;
}

CalibrationCurve build_calibration_curve(const SandwichedCircuit& benchmark, const std::vector<double>& p_grid,
                                         std::uint64_t shots, std::uint64_t seed, std::size_t workers) {
    if (p_grid.empty()) {
        throw InvalidParameterError("calibration grid is empty");
    }
    for (std::size_t i = 1; i < p_grid.size(); ++i) {
        if (!(p_grid[i] > p_grid[i - 1])) {
            throw InvalidParameterError("calibration grid must be strictly increasing");
        }
    }
    const Circuit executable = transpile_to_basis(benchmark.circuit);
    std::vector<double> raw(p_grid.size());
    parallel_for(p_grid.size(), workers, [&](std::size_t i) {
        const CountsMap counts =
            run_trajectories(executable, NoiseSpec::depolarizing(p_grid[i]), shots, derive_seed(seed, "calibration", i));
        raw[i] = discard_fraction(filter_counts(counts, benchmark.check_bits).discarded, shots);
    });
    const std::vector<double> fitted = isotonic_fit(raw);

    CalibrationCurve curve;
    curve.benchmark_label = benchmark.circuit.label();
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        curve.points.push_back({p_grid[i], fitted[i], raw[i], shots});
    }
    return curve;
}

CurveInversion invert_curve(const CalibrationCurve& curve, double d) {
    const auto& pts = curve.points;
    if (pts.size() < 2 || pts.front().expected_discard == pts.back().expected_discard) {
        throw CalibrationError("calibration curve has fewer than two distinct discard levels");
    }
    if (d <= pts.front().expected_discard) {
        return {pts.front().p1, true};
    }
    if (d > pts.back().expected_discard) {
        return {pts.back().p1, true};
    }
    const auto it = std::ranges::find_if(pts, [d](const CalibrationPoint& pt) { return pt.expected_discard >= d; });
    const auto& hi = *it;
    if (hi.expected_discard == d) {
        return {hi.p1, false};
    }
    const auto& lo = *(it - 1);
    const double t = (d - lo.expected_discard) / (hi.expected_discard - lo.expected_discard);
    return {lo.p1 + t * (hi.p1 - lo.p1), false};
}

std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n, double z) {
    if (n == 0) {
        throw InvalidParameterError("wilson_interval: n must be >= 1");
    }
    const double nn = static_cast<double>(n);
    const double phat = static_cast<double>(k) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (phat + z2 / (2.0 * nn)) / denom;
    const double half = z / denom * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn));
    const double lo = k == 0 ? 0.0 : std::max(0.0, center - half);
    const double hi = k == n ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

std::vector<NoiseEstimate> estimate_noise_map(const std::vector<ThreadResult>& results, const CalibrationCurve& curve) {
    std::vector<NoiseEstimate> out;
    out.reserve(results.size());
    for (const auto& t : results) {
        const CurveInversion point = invert_curve(curve, t.discard_fraction);
        const auto [lo, hi] = wilson_interval(t.discarded, t.raw.total_shots);
        NoiseEstimate e;
        e.region_id = t.region_id;
        e.d_observed = t.discard_fraction;
        e.p_estimated = point.p;
        e.saturated = point.saturated;
        e.ci_low = invert_curve(curve, lo).p;
        e.ci_high = invert_curve(curve, hi).p;
        out.push_back(e);
    }
    return out;
}

nlohmann::json calibration_to_json(const CalibrationCurve& curve) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : curve.points) {
        points.push_back({{"p1", p.p1}, {"expected_discard", p.expected_discard}, {"raw_discard", p.raw_discard}, {"shots", p.shots}});
    }
    return {{"benchmark", curve.benchmark_label}, {"points", std::move(points)}};
}

nlohmann::json estimate_to_json(const NoiseEstimate& e) {
    return {{"region_id", e.region_id}, {"d", e.d_observed}, {"p_est", e.p_estimated}, {"ci", {e.ci_low, e.ci_high}}, {"saturated", e.saturated}};
}

}  // namespace pcs
