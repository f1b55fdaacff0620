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

#include "pcsmp/circuit.hpp"
#include "pcsmp/counts.hpp"
#include "pcsmp/trajectory.hpp"

namespace pcs {

inline constexpr std::size_t kMaxDensityMatrixQubits = 6;

// Exact outcome distribution of a measured circuit under the same noise
// model as run_trajectories. Every noisy k-qubit gate G acts as
//
//   rho -> (1 - p) G rho G^dag + p / (4^k - 1) * sum_{P != I} (P G) rho (P G)^dag
//
// Throws CapacityError above kMaxDensityMatrixQubits and ContractError if the
// circuit measures nothing. Entries below 1e-15 are dropped.
Distribution density_matrix_reference(const Circuit& c, const NoiseSpec& noise);

}  // namespace pcs
