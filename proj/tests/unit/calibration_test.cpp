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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "pcsmp/benchmarks.hpp"
#include "pcsmp/density_matrix.hpp"
#include "pcsmp/multiprogram.hpp"
#include "pcsmp/errors.hpp"
#include "pcsmp/stats.hpp"
#include "pcsmp/transpile.hpp"

namespace pcs {
namespace {

CalibrationCurve synthetic_curve(const std::vector<std::pair<double, double>>& pts) {
    CalibrationCurve c;
    for (const auto& [p, d] : pts) {
        c.points.push_back({p, d, d, 1000});
    }
    return c;
}

SandwichedCircuit ghz_pcs(std::size_t width) {
    const auto b = ghz_mirror_benchmark(width);
    return sandwich(b, auto_edge_checks(b.payload));
}

TEST(IsotonicTest, PoolsAdjacentViolators) {
    EXPECT_EQ(isotonic_fit({1, 3, 2, 4}), (std::vector<double>{1, 2.5, 2.5, 4}));
    EXPECT_EQ(isotonic_fit({3, 2, 1}), (std::vector<double>{2, 2, 2}));
    EXPECT_EQ(isotonic_fit({1, 3, 2}, {1, 3, 1}), (std::vector<double>{1, 2.75, 2.75}));
    EXPECT_TRUE(isotonic_fit({}).empty());
    EXPECT_THROW(isotonic_fit({1, 2}, {1}), ShapeError);
}

TEST(IsotonicTest, OutputIsMonotoneAndPreservesMass) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> noise(0.0, 0.05);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> v;
        for (int i = 0; i < 40; ++i) {
            v.push_back(0.01 * i + noise(rng));
        }
        const auto fit = isotonic_fit(v);
        ASSERT_TRUE(std::ranges::is_sorted(fit));
        double a = 0.0;
        double b = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            a += v[i];
            b += fit[i];
        }
        ASSERT_NEAR(a, b, 1e-9);
        ASSERT_EQ(isotonic_fit(fit), fit);
    }
}

TEST(InvertCurveTest, KnotsInterpolationAndClamps) {
    const auto c = synthetic_curve({{0.01, 0.1}, {0.02, 0.2}, {0.03, 0.2}, {0.04, 0.4}});
    EXPECT_EQ(invert_curve(c, 0.2).p, 0.02);  // plateau resolves to the lower p
    EXPECT_FALSE(invert_curve(c, 0.2).saturated);
    EXPECT_EQ(invert_curve(c, 0.4).p, 0.04);
    EXPECT_NEAR(invert_curve(c, 0.15).p, 0.015, 1e-15);
    EXPECT_NEAR(invert_curve(c, 0.3).p, 0.035, 1e-15);
    const auto low = invert_curve(c, 0.0);
    EXPECT_EQ(low.p, 0.01);
    EXPECT_TRUE(low.saturated);
    const auto high = invert_curve(c, 0.9);
    EXPECT_EQ(high.p, 0.04);
    EXPECT_TRUE(high.saturated);
}

TEST(InvertCurveTest, DegenerateCurveThrows) {
    EXPECT_THROW(invert_curve(synthetic_curve({{0.01, 0.1}}), 0.1), CalibrationError);
    EXPECT_THROW(invert_curve(synthetic_curve({{0.01, 0.1}, {0.02, 0.1}}), 0.1), CalibrationError);
}

TEST(InvertCurveTest, InverseIsMonotone) {
    const auto c = synthetic_curve({{0.0, 0.0}, {0.01, 0.05}, {0.02, 0.05}, {0.03, 0.2}, {0.05, 0.3}});
    double previous = -1.0;
    for (double d = 0.0; d <= 0.35; d += 0.001) {
        const double p = invert_curve(c, d).p;
        ASSERT_GE(p, previous) << d;
        previous = p;
    }
}

TEST(WilsonTest, KnownValues) {
    const auto [lo, hi] = wilson_interval(50, 100);
    EXPECT_NEAR(lo, 0.4038, 1e-4);
    EXPECT_NEAR(hi, 0.5962, 1e-4);
    const auto zero = wilson_interval(0, 1000);
    EXPECT_EQ(zero.first, 0.0);
    EXPECT_GT(zero.second, 0.0);
    EXPECT_LT(zero.second, 0.005);
    const auto all = wilson_interval(10, 10);
    EXPECT_NEAR(all.second, 1.0, 1e-12);
    EXPECT_THROW(wilson_interval(0, 0), InvalidParameterError);
}

TEST(CalibrationCurveTest, EndpointsAndNoiselessPoint) {
    const auto s = ghz_pcs(8);
    const auto c = build_calibration_curve(s, {0.0, 0.0005, 0.03}, 10000, 1);
    ASSERT_EQ(c.points.size(), 3u);
    EXPECT_EQ(c.points[0].expected_discard, 0.0);
    EXPECT_EQ(c.points[0].raw_discard, 0.0);
    EXPECT_GT(c.points[2].raw_discard, c.points[1].raw_discard);
    EXPECT_EQ(c.benchmark_label, s.circuit.label());
    EXPECT_THROW(build_calibration_curve(s, {}, 100, 1), InvalidParameterError);
    EXPECT_THROW(build_calibration_curve(s, {0.02, 0.01}, 100, 1), InvalidParameterError);
    EXPECT_THROW(build_calibration_curve(s, {0.01, 0.01}, 100, 1), InvalidParameterError);
}

TEST(CalibrationCurveTest, WorkersDoNotChangeTheCurve) {
    const auto s = ghz_pcs(8);
    const std::vector<double> grid{0.001, 0.005, 0.01, 0.02};
    const auto a = build_calibration_curve(s, grid, 3000, 4, 1);
    const auto b = build_calibration_curve(s, grid, 3000, 4, 3);
    EXPECT_EQ(calibration_to_json(a), calibration_to_json(b));
}

TEST(CalibrationCurveTest, MatchesOracleOnReducedVariant) {
    const auto s = ghz_pcs(4);
    const Circuit c = transpile_to_basis(s.circuit);
    double fire = 0.0;
    for (const auto& [k, prob] : density_matrix_reference(c, NoiseSpec::depolarizing(0.01))) {
        fire += (k[4] == '1' || k[5] == '1') ? prob : 0.0;
    }
    const auto curve = build_calibration_curve(s, {0.005, 0.01, 0.015}, 10000, 77);
    const double sigma = std::sqrt(fire * (1.0 - fire) / 10000.0);
    EXPECT_LE(std::abs(curve.points[1].raw_discard - fire), 3.0 * sigma);
}

TEST(CalibrationCurveTest, RawViolationsStayWithinSamplingNoise) {
    const auto s = ghz_pcs(8);
    std::vector<double> grid;
    for (int i = 0; i < 30; ++i) {
        grid.push_back(0.0005 + i * 0.001);
    }
    const auto c = build_calibration_curve(s, grid, 10000, 5);
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        const double d = c.points[i].raw_discard;
        const double fitted = c.points[i].expected_discard;
        const double sigma = std::sqrt(std::max(d * (1.0 - d), 1e-6) / 10000.0);
        EXPECT_LE(std::abs(d - fitted), 4.0 * sigma) << i;
        if (i > 0) {
            EXPECT_GE(fitted, c.points[i - 1].expected_discard);
        }
    }
}

TEST(EstimateTest, IntervalsBracketTheEstimate) {
    const auto s = ghz_pcs(8);
    std::vector<double> grid;
    for (int i = 0; i < 30; ++i) {
        grid.push_back(0.0005 + i * 0.001);
    }
    const auto curve = build_calibration_curve(s, grid, 20000, 8);
    const auto qpu = make_linear_sweep_qpu(10, 10, 0.0, 0.03);
    const auto threads = process_threads(run_multiprogram(qpu, s, 5000, 3), s.check_bits);
    const auto est = estimate_noise_map(threads, curve);
    ASSERT_EQ(est.size(), 10u);
    EXPECT_EQ(est[0].d_observed, 0.0);
    EXPECT_EQ(est[0].p_estimated, grid.front());
    EXPECT_TRUE(est[0].saturated);
    for (const auto& e : est) {
        EXPECT_LE(e.ci_low, e.p_estimated);
        EXPECT_LE(e.p_estimated, e.ci_high);
        const auto j = estimate_to_json(e);
        EXPECT_EQ(j.at("ci").size(), 2u);
        EXPECT_EQ(j.at("region_id").get<std::size_t>(), e.region_id);
    }
}

TEST(EstimateTest, ErrorShrinksWithShots) {
    const auto s = ghz_pcs(8);
    std::vector<double> grid;
    for (int i = 0; i < 40; ++i) {
        grid.push_back(0.001 + i * 0.00075);
    }
    const auto curve = build_calibration_curve(s, grid, 200000, 21);
    const auto qpu = make_qpu_from_rates({0.004, 0.009, 0.014, 0.019, 0.024}, 10);
    double previous = std::numeric_limits<double>::infinity();
    for (std::uint64_t shots : {1000, 10000, 100000}) {
        const auto threads = process_threads(run_multiprogram(qpu, s, shots, 6), s.check_bits);
        std::vector<double> errors;
        for (const auto& e : estimate_noise_map(threads, curve)) {
            errors.push_back(std::abs(e.p_estimated - qpu.region(e.region_id).noise.p1));
        }
        const double m = median(errors);
        EXPECT_LT(m, previous) << shots;
        previous = m;
    }
}

TEST(StatsTest, SpearmanAndRanks) {
    EXPECT_EQ(average_ranks({10, 20, 20, 5}), (std::vector<double>{2, 3.5, 3.5, 1}));
    EXPECT_NEAR(spearman({1, 2, 3, 4}, {10, 20, 30, 40}), 1.0, 1e-12);
    EXPECT_NEAR(spearman({1, 2, 3, 4}, {4, 3, 2, 1}), -1.0, 1e-12);
    EXPECT_NEAR(spearman({1, 2, 3, 4, 5}, {1, 4, 9, 16, 25}), 1.0, 1e-12);
    EXPECT_TRUE(std::isnan(spearman({1, 1, 1}, {1, 2, 3})));
    EXPECT_THROW(spearman({1, 2}, {1}), ShapeError);
    EXPECT_EQ(median({3, 1, 2}), 2.0);
    EXPECT_EQ(median({4, 1, 2, 3}), 2.5);
    EXPECT_THROW(median({}), InvalidParameterError);
}

}  // namespace
}  // namespace pcs
