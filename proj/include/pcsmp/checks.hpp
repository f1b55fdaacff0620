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
#include <string_view>
#include <vector>

#include "pcsmp/circuit.hpp"
#include "pcsmp/gate_kernels.hpp"
#include "pcsmp/pauli_string.hpp"

namespace pcs {

// A left/right Pauli check pair around a payload U. A pair is only useful
// when R U L = U (up to a phase the sandwich compensates).
struct CheckPair {
    PauliString left;
    PauliString right;
    std::vector<std::size_t> protected_qubits;  // union of both supports

    // Throws ShapeError on a length mismatch and InvalidParameterError if
    // either side is non-Hermitian (phase +-i) or acts trivially.
    static CheckPair make(PauliString left, PauliString right);
    // "+X......." style strings; '.' stands for I.
    static CheckPair parse(std::string_view left, std::string_view right);

    friend bool operator==(const CheckPair&, const CheckPair&) = default;
};

// True iff R * U * L == c * U for a unit scalar c, compared on dense
// matrices with max-abs tolerance 1e-9. Throws ShapeError on length
// mismatches, NonUnitaryError if u measures, CapacityError above 12 qubits.
bool validate_check_pair(const PauliString& left, const PauliString& right, const Circuit& u);

// Returns U * left * U^dag so that (result) U (left) = U. Requires a
// payload built from {H, S, Sdg, X, Y, Z, CX}; otherwise UnsupportedGateError.
PauliString synthesize_right_check(const PauliString& left, const Circuit& u);

// The scalar c with R_ops * U * L_ops == c * U, where *_ops drop the stored
// phases (controlled-Pauli gates realize the bare factors). Empty when the
// pair does not satisfy the check relation. Uses Pauli conjugation for
// Clifford payloads and dense matrices otherwise.
std::optional<Amplitude> kickback_phase(const CheckPair& check, const Circuit& u);

// An error E striking just before the right check flips the ancilla iff E
// anti-commutes with R.
bool detect_rate_theoretical(const CheckPair& check, const PauliString& error);

// Single-qubit checks on the first and last payload qubit. For each edge the
// candidates X then Z are tried with the check relation and the first that
// holds is used (left == right). Throws ConstructionError when neither fits.
std::vector<CheckPair> auto_edge_checks(const Circuit& u);

}  // namespace pcs
