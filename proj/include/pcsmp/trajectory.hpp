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

#include <cstdint>

#include "pcsmp/circuit.hpp"
#include "pcsmp/counts.hpp"

namespace pcs {

// Depolarizing strengths: p1 after every noisy single-qubit gate, p2 after
// every two-qubit gate.
struct NoiseSpec {
    double p1 = 0.0;
    double p2 = 0.0;

    // p2 = 2 * p1.
    static NoiseSpec depolarizing(double p1);
    // Throws InvalidParameterError unless both rates lie in [0, 1].
    void validate() const;
    bool noiseless() const { return p1 == 0.0 && p2 == 0.0; }

    friend bool operator==(const NoiseSpec&, const NoiseSpec&) = default;
};

// Monte Carlo Pauli-trajectory sampling of a measured circuit.
//
// Each shot draws, for every noisy gate in order, whether a depolarizing
// error fires (probability p1 or p2) and if so which of the 3 (resp. 15)
// non-identity Paulis follows the gate, then one uniform variate for the
// terminal measurement. Shots that drew the same error pattern share a
// single statevector evolution; the outcome is read from the Born
// distribution of that pattern. The result is a deterministic function of
// (c, noise, shots, seed).
//
// Throws ContractError if c has no MEASURE, InvalidParameterError for
// shots == 0, UnsupportedGateError for noisy gates on three or more qubits.
CountsMap run_trajectories(const Circuit& c, const NoiseSpec& noise, std::uint64_t shots, std::uint64_t seed);

// Exact noiseless outcome probabilities of a measured circuit, read from a
// single statevector. Entries below 1e-15 are dropped.
Distribution ideal_distribution(const Circuit& c);

}  // namespace pcs
