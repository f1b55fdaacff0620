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

#include "pcsmp/multiprogram.hpp"

#include "pcsmp/errors.hpp"
#include "pcsmp/parallel.hpp"
#include "pcsmp/seeding.hpp"
#include "pcsmp/transpile.hpp"

namespace pcs {

std::vector<ThreadRun> run_multiprogram(const QpuModel& qpu, const SandwichedCircuit& sandwiched, std::uint64_t shots,
                                        std::uint64_t seed, const MultiprogramOptions& options) {
    const AllocationPlan plan = allocate_threads(qpu, sandwiched.q_algorithm(), sandwiched.q_ancilla(), shots);
    if (plan.allocations.empty()) {
        throw ContractError("run_multiprogram: no region can host the circuit");
    }
    const Circuit executable = transpile_to_basis(sandwiched.circuit);

    std::vector<ThreadRun> runs(plan.allocations.size());
    parallel_for(runs.size(), options.workers, [&](std::size_t i) {
        const Allocation& a = plan.allocations[i];
        const NoiseSpec noise = qpu.region(a.region_id).noise;
        try {
            runs[i] = ThreadRun{a, noise,
                                run_trajectories(executable, noise, shots, derive_seed(seed, options.stream_tag, a.thread_id))};
        } catch (const Error& e) {
            throw SimulationError(a.thread_id, e.what());
        }
    });
    return runs;
}

}  // namespace pcs
