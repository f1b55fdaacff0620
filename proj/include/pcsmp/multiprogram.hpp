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

#include "pcsmp/counts.hpp"
#include "pcsmp/qpu.hpp"
#include "pcsmp/sandwich.hpp"

namespace pcs {

struct ThreadRun {
    Allocation allocation;
    NoiseSpec noise;
    CountsMap counts;
};

struct MultiprogramOptions {
    std::size_t workers = 1;
    // Stream tag mixed into every per-thread seed; distinct runs of one
    // experiment (PCS vs. baseline) use distinct tags.
    std::string stream_tag = "pcs";
};

// Transpiles the sandwiched circuit and simulates one instance per allocated
// region with that region's noise. Thread t uses seed
// derive_seed(seed, stream_tag, t). Results are ordered by thread id and do
// not depend on the worker count.
//
// Throws ContractError if no region can host the circuit and SimulationError
// (tagged with the thread id) if a thread fails.
std::vector<ThreadRun> run_multiprogram(const QpuModel& qpu, const SandwichedCircuit& sandwiched, std::uint64_t shots,
                                        std::uint64_t seed, const MultiprogramOptions& options = {});

}  // namespace pcs
