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

// Whole-pipeline checks through the library API: sandwich, multi-program
// run, post-selection, ensemble and characterization.

#include <gtest/gtest.h>

#include "pcsmp/benchmarks.hpp"
#include "pcsmp/calibration.hpp"
#include "pcsmp/multiprogram.hpp"
#include "pcsmp/postprocess.hpp"
#include "pcsmp/stats.hpp"

namespace pcs {
namespace {

struct Outcome {
    double pcs = 0.0;
    double base = 0.0;
};

Outcome replicate(const Benchmark& b, const QpuModel& qpu, std::uint64_t shots, std::uint64_t seed) {
    const auto s = sandwich(b, auto_edge_checks(b.payload));
    const auto ideal = ideal_distribution(measured_circuit(b));
    const auto ens = ensemble(process_threads(run_multiprogram(qpu, s, shots, seed), s.check_bits));
    const auto base = unweighted_sum(run_multiprogram(qpu, sandwich(b, {}), shots, seed, {.stream_tag = "base"}));
    return {fidelity(ens.cumulative, ideal), fidelity(base, ideal)};
}

TEST(PipelineTest, GhzMirrorReplicationImproves) {
    const auto r = replicate(ghz_mirror_benchmark(8), make_linear_sweep_qpu(60, 10, 0.0005, 0.03), 10000, 1);
    EXPECT_GT(r.pcs, r.base);
}

TEST(PipelineTest, ToffoliReplicationImproves) {
    const auto r = replicate(toffoli_benchmark("110"), make_linear_sweep_qpu(60, 10, 0.0005, 0.03), 10000, 1);
    EXPECT_GT(r.pcs, r.base);
}

TEST(PipelineTest, NoiselessQpuIsPerfect) {
    for (const auto& b : {ghz_mirror_benchmark(8), toffoli_benchmark("101")}) {
        const auto r = replicate(b, make_qpu_from_rates({0.0, 0.0, 0.0}, 10), 3000, 4);
        EXPECT_NEAR(r.pcs, 1.0, 1e-12) << b.label;
        EXPECT_NEAR(r.base, 1.0, 1e-12) << b.label;
    }
}

TEST(PipelineTest, CharacterizationRanksRegions) {
    const auto b = ghz_mirror_benchmark(8);
    const auto s = sandwich(b, auto_edge_checks(b.payload));
    const auto qpu = make_linear_sweep_qpu(30, 10, 0.0005, 0.03).permuted(17);
    std::vector<double> grid;
    for (int i = 0; i < 30; ++i) {
        grid.push_back(0.0005 + i * (0.0295 / 29));
    }
    const auto curve = build_calibration_curve(s, grid, 10000, 2);
    const auto threads = process_threads(run_multiprogram(qpu, s, 10000, 2), s.check_bits);
    std::vector<double> est;
    std::vector<double> truth;
    for (const auto& e : estimate_noise_map(threads, curve)) {
        est.push_back(e.p_estimated);
        truth.push_back(qpu.region(e.region_id).noise.p1);
    }
    EXPECT_GE(spearman(est, truth), 0.95);
}

}  // namespace
}  // namespace pcs
