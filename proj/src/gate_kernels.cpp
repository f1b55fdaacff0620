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

#include "pcsmp/gate_kernels.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "pcsmp/errors.hpp"

namespace pcs {

namespace {

constexpr Amplitude kI{0.0, 1.0};

Amplitude expi(double phi) { return {std::cos(phi), std::sin(phi)}; }

}  // namespace

Mat2 single_qubit_matrix(GateKind kind, double theta) {
    using std::numbers::pi;
    const double r = 1.0 / std::numbers::sqrt2;
    switch (kind) {
        case GateKind::H: return {r, r, r, -r};
        case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y: return {0.0, -kI, kI, 0.0};
        case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
        case GateKind::SX: return {Amplitude{0.5, 0.5}, Amplitude{0.5, -0.5}, Amplitude{0.5, -0.5}, Amplitude{0.5, 0.5}};
        case GateKind::S: return {1.0, 0.0, 0.0, kI};
        case GateKind::Sdg: return {1.0, 0.0, 0.0, -kI};
        case GateKind::T: return {1.0, 0.0, 0.0, expi(pi / 4)};
        case GateKind::Tdg: return {1.0, 0.0, 0.0, expi(-pi / 4)};
        case GateKind::RZ: return {expi(-theta / 2), 0.0, 0.0, expi(theta / 2)};
        default:
            throw UnsupportedGateError(fmt::format("{} has no single-qubit matrix", gate_name(kind)));
    }
}

Mat2 pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::I: return {1.0, 0.0, 0.0, 1.0};
        case Pauli::X: return single_qubit_matrix(GateKind::X);
        case Pauli::Y: return single_qubit_matrix(GateKind::Y);
        case Pauli::Z: return single_qubit_matrix(GateKind::Z);
    }
    return {};
}

void apply_matrix(std::span<Amplitude> state, std::size_t target, const Mat2& m, std::uint64_t control_mask) {
    const std::size_t step = std::size_t{1} << target;
    const std::size_t dim = state.size();
    for (std::size_t base = 0; base < dim; base += 2 * step) {
        for (std::size_t i0 = base; i0 < base + step; ++i0) {
            if ((i0 & control_mask) != control_mask) {
                continue;
            }
            const std::size_t i1 = i0 | step;
            const Amplitude a0 = state[i0];
            const Amplitude a1 = state[i1];
            state[i0] = m[0] * a0 + m[1] * a1;
            state[i1] = m[2] * a0 + m[3] * a1;
        }
    }
}

void apply_pauli(std::span<Amplitude> state, std::size_t target, Pauli p) {
    const std::size_t step = std::size_t{1} << target;
    const std::size_t dim = state.size();
    switch (p) {
        case Pauli::I: return;
        case Pauli::Z:
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & step) {
                    state[i] = -state[i];
                }
            }
            return;
        case Pauli::X:
        case Pauli::Y:
            for (std::size_t base = 0; base < dim; base += 2 * step) {
                for (std::size_t i0 = base; i0 < base + step; ++i0) {
                    std::swap(state[i0], state[i0 | step]);
                    if (p == Pauli::Y) {
                        // Y|0> = i|1>, Y|1> = -i|0>
                        state[i0] *= -kI;
                        state[i0 | step] *= kI;
                    }
                }
            }
            return;
    }
}

void apply_gate(std::span<Amplitude> state, const Gate& gate) {
    const auto& q = gate.qubits;
    switch (gate.kind) {
        case GateKind::Measure: throw NonUnitaryError("MEASURE has no unitary action");
        case GateKind::CX:
            apply_matrix(state, q[1], pauli_matrix(Pauli::X), std::uint64_t{1} << q[0]);
            return;
        case GateKind::CCX:
            apply_matrix(state, q[2], pauli_matrix(Pauli::X), (std::uint64_t{1} << q[0]) | (std::uint64_t{1} << q[1]));
            return;
        case GateKind::ControlledPauli:
            apply_matrix(state, q[1], pauli_matrix(gate.pauli), std::uint64_t{1} << q[0]);
            return;
        default: apply_matrix(state, q[0], single_qubit_matrix(gate.kind, gate.theta)); return;
    }
}

}  // namespace pcs
