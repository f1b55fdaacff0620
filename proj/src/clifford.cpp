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

#include "pcsmp/clifford.hpp"

#include <fmt/format.h>

#include "pcsmp/errors.hpp"

namespace pcs {

// Heisenberg-picture update rules P -> G P G^dagger in symplectic form.
class PauliConjugator {
public:
    explicit PauliConjugator(PauliString p) : p_(std::move(p)) {}

    void apply(const Gate& g) {
        auto& x = p_.x_;
        auto& z = p_.z_;
        const std::size_t a = g.qubits[0];
        switch (g.kind) {
            case GateKind::H:
                flip_if(x[a] & z[a]);
                std::swap(x[a], z[a]);
                break;
            case GateKind::S:
                flip_if(x[a] & z[a]);
                z[a] ^= x[a];
                break;
            case GateKind::Sdg:
                flip_if(x[a] & (z[a] ^ 1u));
                z[a] ^= x[a];
                break;
            case GateKind::X:
                flip_if(z[a]);
                break;
            case GateKind::Z:
                flip_if(x[a]);
                break;
            case GateKind::Y:
                flip_if(x[a] ^ z[a]);
                break;
            case GateKind::CX: {
                const std::size_t t = g.qubits[1];
                flip_if(x[a] & z[t] & (x[t] ^ z[a] ^ 1u));
                x[t] ^= x[a];
                z[a] ^= z[t];
                break;
            }
            default:
                throw UnsupportedGateError(
                    fmt::format("conjugate_through_clifford: {} is not in {{H, S, Sdg, X, Y, Z, CX}}", gate_name(g.kind)));
        }
    }

    PauliString result() && { return std::move(p_); }

private:
    void flip_if(unsigned bit) {
        if (bit & 1u) {
            p_.negate();
        }
    }

    PauliString p_;
};

PauliString conjugate_through_clifford(const PauliString& p, const Circuit& c) {
    if (p.size() != c.num_qubits()) {
        throw ShapeError(
            fmt::format("conjugate_through_clifford: Pauli has {} qubits, circuit has {}", p.size(), c.num_qubits()));
    }
    PauliConjugator conj(p);
    for (const auto& g : c.gates()) {
        conj.apply(g);
    }
    return std::move(conj).result();
}

}  // namespace pcs
