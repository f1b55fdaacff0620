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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcsmp/trajectory.hpp"

namespace pcs {

struct Region {
    std::size_t id = 0;
    std::size_t qubit_count = 0;
    NoiseSpec noise;  // hidden ground truth

    friend bool operator==(const Region&, const Region&) = default;
};

struct GridShape {
    std::size_t rows = 0;
    std::size_t cols = 0;

    friend bool operator==(const GridShape&, const GridShape&) = default;
};

// Emulated QPU: disjoint regions laid out row-major on a rectangular grid.
class QpuModel {
public:
    QpuModel() = default;
    // Throws InvalidParameterError unless rows * cols == regions.size() and
    // region ids are 0..N-1 in order.
    QpuModel(std::vector<Region> regions, GridShape grid);

    const std::vector<Region>& regions() const { return regions_; }
    const Region& region(std::size_t id) const { return regions_.at(id); }
    GridShape grid() const { return grid_; }
    std::size_t total_qubits() const;

    // Seed used to shuffle rates across regions, if any.
    std::optional<std::uint64_t> permutation_seed() const { return permutation_seed_; }

    // Same regions with their noise specs shuffled by a seeded permutation.
    QpuModel permuted(std::uint64_t seed) const;

    friend bool operator==(const QpuModel&, const QpuModel&) = default;

private:
    std::vector<Region> regions_;
    GridShape grid_;
    std::optional<std::uint64_t> permutation_seed_;
};

// Most-square rows x cols factorization with rows <= cols.
GridShape default_grid(std::size_t regions);

// Region i gets p1 = p_min + i (p_max - p_min) / (regions - 1) and p2 = 2 p1.
QpuModel make_linear_sweep_qpu(std::size_t regions, std::size_t qubits_per_region, double p_min, double p_max,
                               std::optional<GridShape> grid = std::nullopt);

// One region per rate, p2 = 2 p1.
QpuModel make_qpu_from_rates(const std::vector<double>& rates, std::size_t qubits_per_region,
                             std::optional<GridShape> grid = std::nullopt);

struct Allocation {
    std::size_t thread_id = 0;
    std::size_t region_id = 0;
    std::uint64_t shots = 0;

    friend bool operator==(const Allocation&, const Allocation&) = default;
};

struct AllocationPlan {
    // floor(total_qubits / (q_algorithm + q_ancilla)).
    std::size_t max_threads = 0;
    // One thread per region that can hold a full instance, by region id.
    std::vector<Allocation> allocations;
    // One line per skipped region.
    std::vector<std::string> warnings;
};

// Places one circuit instance in every region with enough qubits. An empty
// allocation list is a normal outcome, not an error. Throws
// InvalidParameterError when q_algorithm + q_ancilla == 0.
AllocationPlan allocate_threads(const QpuModel& qpu, std::size_t q_algorithm, std::size_t q_ancilla, std::uint64_t shots = 0);

}  // namespace pcs
