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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

#include "pcsmp/circuit.hpp"
#include "pcsmp/pauli_string.hpp"

namespace pcs {

using Amplitude = std::complex<double>;

// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Mat2 = std::array<Amplitude, 4>;

// Amplitude index bit q corresponds to qubit q (qubit 0 is least significant).

Mat2 single_qubit_matrix(GateKind kind, double theta = 0.0);
Mat2 pauli_matrix(Pauli p);

// Applies m to `target` on every basis state whose bits in control_mask are
// all set.
void apply_matrix(std::span<Amplitude> state, std::size_t target, const Mat2& m, std::uint64_t control_mask = 0);

void apply_pauli(std::span<Amplitude> state, std::size_t target, Pauli p);

// Any unitary gate kind; MEASURE raises NonUnitaryError.
void apply_gate(std::span<Amplitude> state, const Gate& gate);

}  // namespace pcs
