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

#include "pcsmp/transpile.hpp"

#include <numbers>

#include <fmt/format.h>

#include "pcsmp/errors.hpp"

namespace pcs {

namespace {

using std::numbers::pi;

void lower(const Gate& g, Circuit& out);

void lower_h(std::size_t q, Circuit& out) {
    out.append(Gate::rz(q, pi / 2));
    out.append(Gate::single(GateKind::SX, q));
    out.append(Gate::rz(q, pi / 2));
}

void lower_ccx(std::size_t a, std::size_t b, std::size_t t, Circuit& out) {
    const Gate network[] = {
        Gate::single(GateKind::H, t),  Gate::cx(b, t),
        Gate::single(GateKind::Tdg, t), Gate::cx(a, t),
        Gate::single(GateKind::T, t),  Gate::cx(b, t),
        Gate::single(GateKind::Tdg, t), Gate::cx(a, t),
        Gate::single(GateKind::T, b),  Gate::single(GateKind::T, t),
        Gate::single(GateKind::H, t),  Gate::cx(a, b),
        Gate::single(GateKind::T, a),  Gate::single(GateKind::Tdg, b),
        Gate::cx(a, b),
    };
    for (const auto& g : network) {
        lower(g, out);
    }
}

void lower(const Gate& g, Circuit& out) {
    const std::size_t q = g.qubits[0];
    switch (g.kind) {
        case GateKind::CX:
        case GateKind::X:
        case GateKind::SX:
        case GateKind::RZ:
        case GateKind::Measure: out.append(g); return;
        case GateKind::H: lower_h(q, out); return;
        case GateKind::Y:
            out.append(Gate::rz(q, pi));
            out.append(Gate::single(GateKind::X, q));
            return;
        case GateKind::Z: out.append(Gate::rz(q, pi)); return;
        case GateKind::S: out.append(Gate::rz(q, pi / 2)); return;
        case GateKind::Sdg: out.append(Gate::rz(q, -pi / 2)); return;
        case GateKind::T: out.append(Gate::rz(q, pi / 4)); return;
        case GateKind::Tdg: out.append(Gate::rz(q, -pi / 4)); return;
        case GateKind::CCX: lower_ccx(g.qubits[0], g.qubits[1], g.qubits[2], out); return;
        case GateKind::ControlledPauli: {
            const std::size_t t = g.qubits[1];
            switch (g.pauli) {
                case Pauli::X: out.append(Gate::cx(q, t)); return;
                case Pauli::Z:
                    lower_h(t, out);
                    out.append(Gate::cx(q, t));
                    lower_h(t, out);
                    return;
                case Pauli::Y:
                    out.append(Gate::rz(t, -pi / 2));
                    out.append(Gate::cx(q, t));
                    out.append(Gate::rz(t, pi / 2));
                    return;
                case Pauli::I: break;
            }
            break;
        }
    }
    throw UnsupportedGateError(fmt::format("transpile_to_basis: no decomposition for {}", gate_name(g.kind)));
}

}  // namespace

bool is_basis_gate(GateKind kind) {
    return kind == GateKind::CX || kind == GateKind::X || kind == GateKind::SX || kind == GateKind::RZ ||
           kind == GateKind::Measure;
}

Circuit transpile_to_basis(const Circuit& c) {
    Circuit out(c.num_qubits(), c.num_clbits(), c.label());
    for (const auto& g : c.gates()) {
        lower(g, out);
    }
    return out;
}

}  // namespace pcs
