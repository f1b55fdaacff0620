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

#include "pcsmp/circuit.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include <fmt/format.h>

#include "pcsmp/errors.hpp"

namespace pcs {

namespace {

struct KindInfo {
    GateKind kind;
    std::string_view name;
    std::size_t arity;
    bool clifford;
};

constexpr std::array<KindInfo, 14> kKinds = {{
    {GateKind::H, "H", 1, true},
    {GateKind::X, "X", 1, true},
    {GateKind::SX, "SX", 1, false},
    {GateKind::Y, "Y", 1, true},
    {GateKind::Z, "Z", 1, true},
    {GateKind::S, "S", 1, true},
    {GateKind::Sdg, "Sdg", 1, true},
    {GateKind::T, "T", 1, false},
    {GateKind::Tdg, "Tdg", 1, false},
    {GateKind::RZ, "RZ", 1, false},
    {GateKind::CX, "CX", 2, true},
    {GateKind::CCX, "CCX", 3, false},
    {GateKind::ControlledPauli, "CONTROLLED_PAULI", 2, false},
    {GateKind::Measure, "MEASURE", 1, false},
}};

const KindInfo& info(GateKind kind) {
    for (const auto& k : kKinds) {
        if (k.kind == kind) {
            return k;
        }
    }
    throw UnsupportedGateError("unknown gate kind");
}

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

GateKind gate_kind_from_name(std::string_view name) {
    for (const auto& k : kKinds) {
        if (k.name == name) {
            return k.kind;
        }
    }
    throw UnsupportedGateError(fmt::format("unknown gate kind '{}'", name));
}

std::size_t gate_arity(GateKind kind) { return info(kind).arity; }

bool is_clifford_generator(GateKind kind) { return info(kind).clifford; }

bool is_noisy(GateKind kind) { return kind != GateKind::RZ && kind != GateKind::Measure; }

Gate Gate::single(GateKind kind, std::size_t q) {
    if (gate_arity(kind) != 1 || kind == GateKind::Measure) {
        throw InvalidParameterError(fmt::format("{} is not a single-qubit unitary", gate_name(kind)));
    }
    return Gate{kind, {q}, 0.0, Pauli::I, std::nullopt};
}

Gate Gate::rz(std::size_t q, double theta) { return Gate{GateKind::RZ, {q}, theta, Pauli::I, std::nullopt}; }

Gate Gate::cx(std::size_t control, std::size_t target) {
    return Gate{GateKind::CX, {control, target}, 0.0, Pauli::I, std::nullopt};
}

Gate Gate::ccx(std::size_t c0, std::size_t c1, std::size_t target) {
    return Gate{GateKind::CCX, {c0, c1, target}, 0.0, Pauli::I, std::nullopt};
}

Gate Gate::controlled_pauli(std::size_t control, std::size_t target, Pauli p) {
    return Gate{GateKind::ControlledPauli, {control, target}, 0.0, p, std::nullopt};
}

Gate Gate::measure(std::size_t q, std::size_t clbit) {
    return Gate{GateKind::Measure, {q}, 0.0, Pauli::I, clbit};
}

Circuit::Circuit(std::size_t num_qubits, std::size_t num_clbits, std::string label)
    : num_qubits_(num_qubits), num_clbits_(num_clbits), label_(std::move(label)) {}

void Circuit::check_gate(const Gate& gate, std::size_t position) const {
    const auto& k = info(gate.kind);
    if (gate.qubits.size() != k.arity) {
        throw ShapeError(fmt::format("{} expects {} qubit(s), got {}", k.name, k.arity, gate.qubits.size()));
    }
    for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
        if (gate.qubits[i] >= num_qubits_) {
            throw ShapeError(fmt::format("{} on qubit {} but circuit has {} qubits", k.name, gate.qubits[i], num_qubits_));
        }
        for (std::size_t j = i + 1; j < gate.qubits.size(); ++j) {
            if (gate.qubits[i] == gate.qubits[j]) {
                throw ShapeError(fmt::format("{} repeats qubit {}", k.name, gate.qubits[i]));
            }
        }
    }
    if (gate.kind == GateKind::Measure) {
        if (!gate.clbit || *gate.clbit >= num_clbits_) {
            throw ShapeError(fmt::format("MEASURE on qubit {} needs a classical target < {}", gate.qubits[0], num_clbits_));
        }
    } else if (gate.clbit) {
        throw ShapeError(fmt::format("{} cannot carry a classical target", k.name));
    }
    if (gate.kind == GateKind::ControlledPauli && gate.pauli == Pauli::I) {
        throw InvalidParameterError("CONTROLLED_PAULI needs a non-identity Pauli");
    }

    // Measurements are terminal: no gate may touch a qubit measured earlier,
    // and a measurement may not precede a unitary already placed later.
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        const Gate& g = gates_[i];
        const bool shares = std::ranges::any_of(gate.qubits, [&](std::size_t q) {
            return std::ranges::find(g.qubits, q) != g.qubits.end();
        });
        if (!shares) {
            continue;
        }
        if (i < position && g.kind == GateKind::Measure) {
            throw ShapeError(fmt::format("{} on qubit {} after it was measured", k.name, g.qubits[0]));
        }
        if (i >= position && gate.kind == GateKind::Measure && g.kind != GateKind::Measure) {
            throw ShapeError(fmt::format("MEASURE on qubit {} before a later unitary", gate.qubits[0]));
        }
    }
}

Circuit& Circuit::append(Gate gate) {
    check_gate(gate, gates_.size());
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    if (other.num_qubits_ > num_qubits_ || other.num_clbits_ > num_clbits_) {
        throw ShapeError(fmt::format("cannot append a {}-qubit circuit to a {}-qubit circuit", other.num_qubits_, num_qubits_));
    }
    for (const auto& g : other.gates_) {
        append(g);
    }
    return *this;
}

Circuit& Circuit::insert(std::size_t index, Gate gate) {
    if (index > gates_.size()) {
        throw ShapeError(fmt::format("insert position {} beyond {} gates", index, gates_.size()));
    }
    check_gate(gate, index);
    gates_.insert(gates_.begin() + static_cast<std::ptrdiff_t>(index), std::move(gate));
    return *this;
}

Circuit& Circuit::measure_all() {
    num_clbits_ = std::max(num_clbits_, num_qubits_);
    for (std::size_t q = 0; q < num_qubits_; ++q) {
        append(Gate::measure(q, q));
    }
    return *this;
}

bool Circuit::has_measurement() const {
    return std::ranges::any_of(gates_, [](const Gate& g) { return g.kind == GateKind::Measure; });
}

bool Circuit::is_clifford() const {
    return std::ranges::all_of(gates_, [](const Gate& g) { return is_clifford_generator(g.kind); });
}

Circuit Circuit::without_measurements() const {
    Circuit out(num_qubits_, num_clbits_, label_);
    for (const auto& g : gates_) {
        if (g.kind != GateKind::Measure) {
            out.gates_.push_back(g);
        }
    }
    return out;
}

std::size_t Circuit::count(GateKind kind) const {
    return static_cast<std::size_t>(std::ranges::count_if(gates_, [kind](const Gate& g) { return g.kind == kind; }));
}

nlohmann::json circuit_to_json(const Circuit& c) {
    nlohmann::json gates = nlohmann::json::array();
    for (const auto& g : c.gates()) {
        nlohmann::json jg = {{"kind", gate_name(g.kind)}, {"qubits", g.qubits}};
        if (g.kind == GateKind::RZ) {
            jg["theta"] = g.theta;
        }
        if (g.kind == GateKind::ControlledPauli) {
            jg["pauli"] = std::string(1, pauli_char(g.pauli));
        }
        if (g.clbit) {
            jg["clbit"] = *g.clbit;
        }
        gates.push_back(std::move(jg));
    }
    nlohmann::json j = {{"num_qubits", c.num_qubits()}, {"gates", std::move(gates)}};
    if (c.num_clbits() > 0) {
        j["num_clbits"] = c.num_clbits();
    }
    if (!c.label().empty()) {
        j["label"] = c.label();
    }
    return j;
}

Circuit circuit_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("num_qubits") || !j["num_qubits"].is_number_unsigned()) {
        throw ConfigError("circuit: 'num_qubits' must be a non-negative integer");
    }
    if (!j.contains("gates") || !j["gates"].is_array()) {
        throw ConfigError("circuit: 'gates' must be an array");
    }
    Circuit c(j["num_qubits"].get<std::size_t>(), j.value("num_clbits", std::size_t{0}), j.value("label", std::string{}));
    std::size_t index = 0;
    for (const auto& jg : j["gates"]) {
        try {
            Gate g;
            g.kind = gate_kind_from_name(jg.at("kind").get<std::string>());
            g.qubits = jg.at("qubits").get<std::vector<std::size_t>>();
            if (g.kind == GateKind::RZ) {
                g.theta = jg.at("theta").get<double>();
            }
            if (g.kind == GateKind::ControlledPauli) {
                const auto label = jg.at("pauli").get<std::string>();
                if (label.size() != 1) {
                    throw ConfigError("'pauli' must be a single letter");
                }
                g.pauli = pauli_from_char(label[0]);
            }
            if (jg.contains("clbit")) {
                g.clbit = jg["clbit"].get<std::size_t>();
            }
            c.append(std::move(g));
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(fmt::format("circuit: gate {}: {}", index, e.what()));
        } catch (const Error& e) {
            throw ConfigError(fmt::format("circuit: gate {}: {}", index, e.what()));
        }
        ++index;
    }
    return c;
}

}  // namespace pcs
