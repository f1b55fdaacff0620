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
#include <string>
#include <vector>

#include "pcsmp/benchmarks.hpp"
#include "pcsmp/checks.hpp"
#include "pcsmp/circuit.hpp"

namespace pcs {

// A payload wrapped in Pauli checks, ready to measure.
//
// Qubits 0..n-1 are the payload, n..n+k-1 the check ancillas (one per
// check). Classical bits mirror that layout: payload qubit q is read into
// bit q and ancilla n+j into bit n+j, so check bits sit at the right end of
// every outcome key.
struct SandwichedCircuit {
    Circuit circuit;
    std::vector<CheckPair> checks;
    std::vector<std::size_t> ancilla_indices;
    std::vector<std::size_t> payload_bits;
    std::vector<std::size_t> check_bits;
    // Position in circuit.gates() of the first right-check gate. Inserting a
    // gate here models a fault right before the right checks.
    std::size_t right_checks_begin = 0;

    std::size_t q_algorithm() const { return payload_bits.size(); }
    std::size_t q_ancilla() const { return ancilla_indices.size(); }
};

// Builds, for checks 1..k:
//
//   prep; H(a_1..a_k); C-L_1 .. C-L_k; payload; C-R_k .. C-R_1; H(a_1..a_k);
//   measure payload and ancillas
//
// Checks nest (L_1 outermost). When R U L equals c U with c != 1 the ancilla
// gets diag(1, conj(c)) after its right check so noiseless runs never fire.
//
// Throws ShapeError on width mismatches and ContractError for a check that
// does not satisfy the check relation against `payload`. An empty check list
// yields preparation + payload + measurement.
SandwichedCircuit sandwich(const Circuit& payload, const std::vector<CheckPair>& checks, const Circuit& preparation = Circuit());

SandwichedCircuit sandwich(const Benchmark& benchmark, const std::vector<CheckPair>& checks);

}  // namespace pcs
