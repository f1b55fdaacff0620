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

#include "pcsmp/benchmarks.hpp"

#include <fmt/format.h>

#include "pcsmp/errors.hpp"

namespace pcs {

Circuit ghz_mirror_payload(std::size_t width) {
    if (width < 2) {
        throw InvalidParameterError(fmt::format("GHZ mirror needs width >= 2, got {}", width));
    }
    Circuit c(width, 0, fmt::format("ghz_mirror_{}", width));
    c.append(Gate::single(GateKind::H, 0));
    for (std::size_t q = 0; q + 1 < width; ++q) {
        c.append(Gate::cx(q, q + 1));
    }
    for (std::size_t q = width - 1; q-- > 0;) {
        c.append(Gate::cx(q, q + 1));
    }
    c.append(Gate::single(GateKind::H, 0));
    return c;
}

Circuit toffoli_payload() {
    constexpr std::size_t a = 0;
    constexpr std::size_t b = 1;
    constexpr std::size_t t = 2;
    Circuit c(3, 0, "toffoli");
    c.append(Gate::single(GateKind::H, t));
    c.append(Gate::cx(b, t));
    c.append(Gate::single(GateKind::Tdg, t));
    c.append(Gate::cx(a, t));
    c.append(Gate::single(GateKind::T, t));
    c.append(Gate::cx(b, t));
    c.append(Gate::single(GateKind::Tdg, t));
    c.append(Gate::cx(a, t));
    c.append(Gate::single(GateKind::T, b));
    c.append(Gate::single(GateKind::T, t));
    c.append(Gate::single(GateKind::H, t));
    c.append(Gate::cx(a, b));
    c.append(Gate::single(GateKind::T, a));
    c.append(Gate::single(GateKind::Tdg, b));
    c.append(Gate::cx(a, b));
    return c;
}

Benchmark ghz_mirror_benchmark(std::size_t width) {
    Circuit payload = ghz_mirror_payload(width);
    return Benchmark{payload.label(), Circuit(width), std::move(payload)};
}

Benchmark toffoli_benchmark(std::string_view input_bits) {
    if (input_bits.size() != 3) {
        throw InvalidParameterError(fmt::format("Toffoli input must have 3 bits, got '{}'", input_bits));
    }
    Circuit prep(3);
    for (std::size_t q = 0; q < 3; ++q) {
        if (input_bits[q] == '1') {
            prep.append(Gate::single(GateKind::X, q));
        } else if (input_bits[q] != '0') {
            throw InvalidParameterError(fmt::format("Toffoli input must be a bit string, got '{}'", input_bits));
        }
    }
    return Benchmark{fmt::format("toffoli_{}", input_bits), std::move(prep), toffoli_payload()};
}

Circuit measured_circuit(const Benchmark& b) {
    Circuit c(b.num_qubits(), b.num_qubits(), b.label);
    c.append(b.preparation);
    c.append(b.payload);
    c.measure_all();
    return c;
}

Circuit build_ghz_mirror(std::size_t width) { return measured_circuit(ghz_mirror_benchmark(width)); }

Circuit build_toffoli(std::string_view input_bits) { return measured_circuit(toffoli_benchmark(input_bits)); }

}  // namespace pcs
