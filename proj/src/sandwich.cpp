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

#include "pcsmp/sandwich.hpp"

#include <cmath>
#include <complex>

#include <fmt/format.h>

#include "pcsmp/errors.hpp"

namespace pcs {

namespace {

void append_controlled(Circuit& c, std::size_t ancilla, const PauliString& p) {
    for (auto q : p.support()) {
        c.append(Gate::controlled_pauli(ancilla, q, p[q]));
    }
}

// diag(1, conj(phase)) on the ancilla, preferring Clifford gates.
void append_phase_fix(Circuit& c, std::size_t ancilla, Amplitude phase) {
    constexpr double tol = 1e-9;
    if (std::abs(phase - Amplitude{1.0, 0.0}) < tol) {
        return;
    }
    if (std::abs(phase + Amplitude{1.0, 0.0}) < tol) {
        c.append(Gate::single(GateKind::Z, ancilla));
    } else if (std::abs(phase - Amplitude{0.0, 1.0}) < tol) {
        c.append(Gate::single(GateKind::Sdg, ancilla));
    } else if (std::abs(phase + Amplitude{0.0, 1.0}) < tol) {
        c.append(Gate::single(GateKind::S, ancilla));
    } else {
        c.append(Gate::rz(ancilla, -std::arg(phase)));
    }
}

}  // namespace

SandwichedCircuit sandwich(const Circuit& payload, const std::vector<CheckPair>& checks, const Circuit& preparation) {
    const std::size_t n = payload.num_qubits();
    const std::size_t k = checks.size();
    if (payload.has_measurement()) {
        throw ContractError("sandwich: payload must not measure");
    }
    if (preparation.has_measurement() || preparation.num_qubits() > n) {
        throw ContractError("sandwich: preparation must be unitary and fit the payload register");
    }

    std::vector<Amplitude> phases;
    phases.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        const auto phase = kickback_phase(checks[j], payload);
        if (!phase) {
            throw ContractError(fmt::format("sandwich: check {} ({} / {}) does not satisfy R U L = U", j,
                                            checks[j].left.str(), checks[j].right.str()));
        }
        phases.push_back(*phase);
    }

    SandwichedCircuit out;
    out.checks = checks;
    out.circuit = Circuit(n + k, n + k, payload.label());
    Circuit& c = out.circuit;
    for (std::size_t q = 0; q < n; ++q) {
        out.payload_bits.push_back(q);
    }
    for (std::size_t j = 0; j < k; ++j) {
        out.ancilla_indices.push_back(n + j);
        out.check_bits.push_back(n + j);
    }

    c.append(preparation);
    for (auto a : out.ancilla_indices) {
        c.append(Gate::single(GateKind::H, a));
    }
    for (std::size_t j = 0; j < k; ++j) {
        append_controlled(c, n + j, checks[j].left);
    }
    c.append(payload);
    out.right_checks_begin = c.size();
    for (std::size_t j = k; j-- > 0;) {
        append_controlled(c, n + j, checks[j].right);
        append_phase_fix(c, n + j, phases[j]);
    }
    for (auto a : out.ancilla_indices) {
        c.append(Gate::single(GateKind::H, a));
    }
    for (std::size_t q = 0; q < n + k; ++q) {
        c.append(Gate::measure(q, q));
    }
    return out;
}

SandwichedCircuit sandwich(const Benchmark& benchmark, const std::vector<CheckPair>& checks) {
    SandwichedCircuit out = sandwich(benchmark.payload, checks, benchmark.preparation);
    out.circuit.set_label(benchmark.label);
    return out;
}

}  // namespace pcs
