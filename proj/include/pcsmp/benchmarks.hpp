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
#include <string_view>

#include "pcsmp/circuit.hpp"

namespace pcs {

// A benchmark splits into a state preparation that runs first and the
// unitary payload that checks protect. Neither part measures.
struct Benchmark {
    std::string label;
    Circuit preparation;
    Circuit payload;

    std::size_t num_qubits() const { return payload.num_qubits(); }
};

// H on qubit 0, CX chain 0->1->...->w-1, then the same gates in reverse.
// The net action is the identity. Throws InvalidParameterError for width < 2.
Circuit ghz_mirror_payload(std::size_t width);

// Standard 6-CX decomposition of CCX(0, 1 -> 2) over {H, T, Tdg, CX}.
Circuit toffoli_payload();

Benchmark ghz_mirror_benchmark(std::size_t width);

// input_bits gives the initial value of qubits 0..2 (qubit 0 leftmost),
// prepared with X gates.
Benchmark toffoli_benchmark(std::string_view input_bits = "110");

// preparation + payload + MEASURE q -> q on every qubit.
Circuit measured_circuit(const Benchmark& b);

Circuit build_ghz_mirror(std::size_t width);
Circuit build_toffoli(std::string_view input_bits = "110");

}  // namespace pcs
