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

#include "pcsmp/qpu.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <fmt/format.h>

#include "pcsmp/errors.hpp"

namespace pcs {

QpuModel::QpuModel(std::vector<Region> regions, GridShape grid) : regions_(std::move(regions)), grid_(grid) {
    if (grid_.rows * grid_.cols != regions_.size()) {
        throw InvalidParameterError(
            fmt::format("grid {}x{} does not hold {} regions", grid_.rows, grid_.cols, regions_.size()));
    }
    for (std::size_t i = 0; i < regions_.size(); ++i) {
        if (regions_[i].id != i) {
            throw InvalidParameterError(fmt::format("region at position {} has id {}", i, regions_[i].id));
        }
        regions_[i].noise.validate();
    }
}

std::size_t QpuModel::total_qubits() const {
    std::size_t n = 0;
    for (const auto& r : regions_) {
        n += r.qubit_count;
    }
    return n;
}

QpuModel QpuModel::permuted(std::uint64_t seed) const {
    std::vector<std::size_t> order(regions_.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    QpuModel out = *this;
    for (std::size_t i = 0; i < regions_.size(); ++i) {
        out.regions_[i].noise = regions_[order[i]].noise;
    }
    out.permutation_seed_ = seed;
    return out;
}

GridShape default_grid(std::size_t regions) {
    std::size_t rows = 1;
    for (std::size_t r = 1; r * r <= regions; ++r) {
        if (regions % r == 0) {
            rows = r;
        }
    }
    return GridShape{rows, regions == 0 ? 0 : regions / rows};
}

QpuModel make_linear_sweep_qpu(std::size_t regions, std::size_t qubits_per_region, double p_min, double p_max,
                               std::optional<GridShape> grid) {
    if (regions == 0) {
        throw InvalidParameterError("a QPU needs at least one region");
    }
    if (!(p_min >= 0.0 && p_min <= p_max && 2.0 * p_max <= 1.0)) {
        throw InvalidParameterError(fmt::format("invalid rate range [{}, {}]", p_min, p_max));
    }
    std::vector<double> rates(regions, p_min);
    if (regions > 1) {
        const double step = (p_max - p_min) / static_cast<double>(regions - 1);
        for (std::size_t i = 0; i < regions; ++i) {
            rates[i] = p_min + static_cast<double>(i) * step;
        }
        rates.back() = p_max;
    }
    return make_qpu_from_rates(rates, qubits_per_region, grid);
}

QpuModel make_qpu_from_rates(const std::vector<double>& rates, std::size_t qubits_per_region, std::optional<GridShape> grid) {
    if (rates.empty()) {
        throw InvalidParameterError("a QPU needs at least one region");
    }
    std::vector<Region> regions;
    regions.reserve(rates.size());
    for (std::size_t i = 0; i < rates.size(); ++i) {
        if (!(rates[i] >= 0.0 && 2.0 * rates[i] <= 1.0)) {
            throw InvalidParameterError(fmt::format("region {} rate {} outside [0, 0.5]", i, rates[i]));
        }
        regions.push_back(Region{i, qubits_per_region, NoiseSpec::depolarizing(rates[i])});
    }
    return QpuModel(std::move(regions), grid.value_or(default_grid(rates.size())));
}

AllocationPlan allocate_threads(const QpuModel& qpu, std::size_t q_algorithm, std::size_t q_ancilla, std::uint64_t shots) {
    const std::size_t width = q_algorithm + q_ancilla;
    if (width == 0) {
        throw InvalidParameterError("a thread needs at least one qubit");
    }
    AllocationPlan plan;
    plan.max_threads = qpu.total_qubits() / width;
    for (const auto& r : qpu.regions()) {
        if (r.qubit_count < width) {
            plan.warnings.push_back(
                fmt::format("region {} skipped: {} qubits < {} required", r.id, r.qubit_count, width));
            continue;
        }
        plan.allocations.push_back(Allocation{plan.allocations.size(), r.id, shots});
    }
    return plan;
}

}  // namespace pcs
