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
#include <optional>

#include <Eigen/Dense>

#include "pcsmp/circuit.hpp"
#include "pcsmp/gate_kernels.hpp"
#include "pcsmp/pauli_string.hpp"

namespace pcs {

using DenseMatrix = Eigen::MatrixXcd;

inline constexpr std::size_t kMaxUnitaryQubits = 12;

// Dense 2^n x 2^n product of the circuit's gates in order. Column j is the
// image of basis state |j>, with qubit q at bit q of j.
//
// Throws NonUnitaryError if the circuit measures anything and CapacityError
// above kMaxUnitaryQubits.
DenseMatrix unitary_of(const Circuit& c);

// Full matrix of the Pauli string including its phase.
DenseMatrix pauli_string_matrix(const PauliString& p);

// If a == c * b for some scalar |c| = 1 within `tol` (max-abs entrywise),
// returns c.
std::optional<Amplitude> global_phase_between(const DenseMatrix& a, const DenseMatrix& b, double tol = 1e-9);

// |tr(a^dagger b)| / dim. Equals 1 iff a and b agree up to global phase when
// both are unitary.
double phase_insensitive_overlap(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace pcs
