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
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcsmp/pauli_string.hpp"

namespace pcs {

enum class GateKind {
    H,
    X,
    SX,
    Y,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    RZ,
    CX,
    CCX,
    ControlledPauli,
    Measure,
};

std::string_view gate_name(GateKind kind);
GateKind gate_kind_from_name(std::string_view name);
std::size_t gate_arity(GateKind kind);
// Membership in the generator set {H, S, Sdg, X, Y, Z, CX} that Pauli
// conjugation supports. SX and controlled Paulis are Clifford too but are
// deliberately outside this set.
bool is_clifford_generator(GateKind kind);

// RZ and MEASURE are treated as error-free by the noise models.
bool is_noisy(GateKind kind);

struct Gate {
    GateKind kind = GateKind::H;
    // Controls first, target last for CX, CCX and ControlledPauli.
    std::vector<std::size_t> qubits;
    double theta = 0.0;             // RZ only
    Pauli pauli = Pauli::I;         // ControlledPauli only
    std::optional<std::size_t> clbit;  // Measure only

    static Gate single(GateKind kind, std::size_t q);
    static Gate rz(std::size_t q, double theta);
    static Gate cx(std::size_t control, std::size_t target);
    static Gate ccx(std::size_t c0, std::size_t c1, std::size_t target);
    static Gate controlled_pauli(std::size_t control, std::size_t target, Pauli p);
    static Gate measure(std::size_t q, std::size_t clbit);

    friend bool operator==(const Gate&, const Gate&) = default;
};

// Ordered gate list over qubits 0..num_qubits-1. append() enforces the
// structural invariants, so a Circuit that exists is always well formed.
class Circuit {
public:
    Circuit() = default;
    explicit Circuit(std::size_t num_qubits, std::size_t num_clbits = 0, std::string label = {});

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t num_clbits() const { return num_clbits_; }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }

    Circuit& append(Gate gate);
    Circuit& append(const Circuit& other);
    // Inserts before position `index`; used to inject faults in tests.
    Circuit& insert(std::size_t index, Gate gate);

    // Adds MEASURE q -> clbit q for every qubit, growing num_clbits as needed.
    Circuit& measure_all();

    bool has_measurement() const;
    // Every gate is a Clifford generator (see is_clifford_generator).
    bool is_clifford() const;
    // Unitary gates only, in order.
    Circuit without_measurements() const;
    std::size_t count(GateKind kind) const;

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    void check_gate(const Gate& gate, std::size_t position) const;

    std::size_t num_qubits_ = 0;
    std::size_t num_clbits_ = 0;
    std::vector<Gate> gates_;
    std::string label_;
};

nlohmann::json circuit_to_json(const Circuit& c);
// Throws ConfigError with the offending gate index on malformed input.
Circuit circuit_from_json(const nlohmann::json& j);

}  // namespace pcs
