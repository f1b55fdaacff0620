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

#include "pcsmp/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include <fmt/format.h>

#include "pcsmp/errors.hpp"
#include "pcsmp/gate_kernels.hpp"

namespace pcs {

namespace {

constexpr std::size_t kMaxStatevectorQubits = 24;
constexpr double kProbabilityFloor = 1e-15;

// Unitary gates in order plus the terminal measurement map.
struct CompiledCircuit {
    std::size_t num_qubits = 0;
    std::size_t num_clbits = 0;
    std::vector<Gate> ops;
    std::vector<std::pair<std::size_t, std::size_t>> measurements;  // (qubit, clbit)

    std::string key_of(std::size_t basis_index) const {
        std::string key(num_clbits, '0');
        for (auto [q, c] : measurements) {
            key[c] = ((basis_index >> q) & 1u) ? '1' : '0';
        }
        return key;
    }
};

CompiledCircuit compile(const Circuit& c) {
    if (c.num_qubits() > kMaxStatevectorQubits) {
        throw CapacityError(fmt::format("statevector simulation limited to {} qubits, got {}", kMaxStatevectorQubits, c.num_qubits()));
    }
    CompiledCircuit out;
    out.num_qubits = c.num_qubits();
    out.num_clbits = c.num_clbits();
    for (const auto& g : c.gates()) {
        if (g.kind == GateKind::Measure) {
            out.measurements.emplace_back(g.qubits[0], *g.clbit);
        } else {
            out.ops.push_back(g);
        }
    }
    if (out.measurements.empty()) {
        throw ContractError("circuit has no MEASURE gates");
    }
    return out;
}

// One depolarizing event: op index in the high bits, Pauli code in the low 4.
// Pauli code: two bits per qubit of the gate (X bit, Z bit), gate qubit 0 lowest.
using ErrorPattern = std::vector<std::uint32_t>;

std::uint32_t encode_error(std::size_t op, unsigned pauli_code) {
    return static_cast<std::uint32_t>(op << 4) | pauli_code;
}

std::vector<Amplitude> evolve(const CompiledCircuit& cc, const ErrorPattern& errors) {
    std::vector<Amplitude> state(std::size_t{1} << cc.num_qubits, Amplitude{0.0, 0.0});
    state[0] = 1.0;
    auto next_error = errors.begin();
    for (std::size_t i = 0; i < cc.ops.size(); ++i) {
        const Gate& g = cc.ops[i];
        apply_gate(state, g);
        for (; next_error != errors.end() && (*next_error >> 4) == i; ++next_error) {
            const unsigned code = *next_error & 0xFu;
            apply_pauli(state, g.qubits[0], static_cast<Pauli>(code & 3u));
            if (g.qubits.size() > 1) {
                apply_pauli(state, g.qubits[1], static_cast<Pauli>((code >> 2) & 3u));
            }
        }
    }
    return state;
}

bool is_quarter_turn(double theta) {
    const double k = theta / (std::numbers::pi / 2);
    return std::abs(k - std::round(k)) < 1e-12;
}

// Gates that map Paulis to Paulis (signs ignored).
bool propagates_paulis(const Gate& g) {
    switch (g.kind) {
        case GateKind::RZ: return is_quarter_turn(g.theta);
        case GateKind::T:
        case GateKind::Tdg:
        case GateKind::CCX:
        case GateKind::Measure: return false;
        default: return true;
    }
}

// Pauli frame up to sign: bit q of x/z is the X/Z component on qubit q.
struct Frame {
    std::uint64_t x = 0;
    std::uint64_t z = 0;

    void apply_error(const Gate& g, unsigned code) {
        for (std::size_t k = 0; k < g.qubits.size() && k < 2; ++k) {
            const std::uint64_t bit = std::uint64_t{1} << g.qubits[k];
            if ((code >> (2 * k)) & 1u) x ^= bit;
            if ((code >> (2 * k + 1)) & 1u) z ^= bit;
        }
    }

    // P -> G P G^dag for the gates accepted by propagates_paulis.
    void conjugate(const Gate& g) {
        const std::uint64_t a = std::uint64_t{1} << g.qubits[0];
        switch (g.kind) {
            case GateKind::H: {
                const std::uint64_t xa = x & a;
                x = (x & ~a) | (z & a);
                z = (z & ~a) | xa;
                return;
            }
            case GateKind::S:
            case GateKind::Sdg: z ^= x & a; return;
            case GateKind::SX: x ^= z & a; return;
            case GateKind::RZ:
                if (static_cast<long long>(std::llround(g.theta / (std::numbers::pi / 2))) % 2 != 0) {
                    z ^= x & a;
                }
                return;
            case GateKind::CX: {
                const std::uint64_t t = std::uint64_t{1} << g.qubits[1];
                if (x & a) x ^= t;
                if (z & t) z ^= a;
                return;
            }
            case GateKind::ControlledPauli: {
                // C-P = (I (x) V) CX (I (x) V^dag) with V mapping X to P; the
                // symplectic action on the control picks up P's Z-type part.
                const std::size_t tq = g.qubits[1];
                const std::uint64_t t = std::uint64_t{1} << tq;
                const auto p = static_cast<unsigned>(g.pauli);
                const bool px = p & 1u;
                const bool pz = p & 2u;
                if (x & a) {
                    if (px) x ^= t;
                    if (pz) z ^= t;
                }
                // The control gains Z when the target component anticommutes with P.
                const bool tx = x & t;
                const bool tz = z & t;
                if ((tx && pz) != (tz && px)) z ^= a;
                return;
            }
            default: return;  // X, Y, Z, quarter-turn RZ multiples of pi
        }
    }
};

}  // namespace

NoiseSpec NoiseSpec::depolarizing(double p1) { return NoiseSpec{p1, 2.0 * p1}; }

void NoiseSpec::validate() const {
    if (!(p1 >= 0.0 && p1 <= 1.0) || !(p2 >= 0.0 && p2 <= 1.0)) {
        throw InvalidParameterError(fmt::format("noise rates must lie in [0, 1], got p1={} p2={}", p1, p2));
    }
}

CountsMap run_trajectories(const Circuit& c, const NoiseSpec& noise, std::uint64_t shots, std::uint64_t seed) {
    noise.validate();
    if (shots == 0) {
        throw InvalidParameterError("shots must be >= 1");
    }
    const CompiledCircuit cc = compile(c);

    std::vector<double> rate(cc.ops.size(), 0.0);
    for (std::size_t i = 0; i < cc.ops.size(); ++i) {
        const Gate& g = cc.ops[i];
        if (!is_noisy(g.kind)) {
            continue;
        }
        if (g.qubits.size() > 2) {
            if (!noise.noiseless()) {
                throw UnsupportedGateError(
                    fmt::format("no noise model for {}-qubit gate {}; transpile first", g.qubits.size(), gate_name(g.kind)));
            }
            continue;
        }
        rate[i] = g.qubits.size() == 1 ? noise.p1 : noise.p2;
    }

    // Errors after the last non-Clifford op are pushed to the end of the
    // circuit as a Pauli frame; only its X part changes measured bits.
    std::size_t tail_begin = cc.ops.size();
    while (tail_begin > 0 && propagates_paulis(cc.ops[tail_begin - 1])) {
        --tail_begin;
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::uniform_int_distribution<unsigned> one_qubit_pauli(1, 3);
    std::uniform_int_distribution<unsigned> two_qubit_pauli(1, 15);

    struct Shot {
        double variate;
        std::uint64_t flip;
    };
    // Errors before the Clifford tail -> shots that drew them.
    std::map<ErrorPattern, std::vector<Shot>> groups;
    ErrorPattern head;
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        head.clear();
        Frame frame;
        bool in_frame = false;
        for (std::size_t i = 0; i < cc.ops.size(); ++i) {
            const Gate& g = cc.ops[i];
            if (in_frame) {
                frame.conjugate(g);
            }
            if (rate[i] > 0.0 && uniform(rng) < rate[i]) {
                const unsigned code = g.qubits.size() == 2 ? two_qubit_pauli(rng) : one_qubit_pauli(rng);
                if (i < tail_begin) {
                    head.push_back(encode_error(i, code));
                } else {
                    frame.apply_error(g, code);
                    in_frame = true;
                }
            }
        }
        groups[head].push_back(Shot{uniform(rng), frame.x});
    }

    CountsMap out;
    out.width = cc.num_clbits;
    std::map<std::size_t, std::uint64_t> by_index;
    std::vector<double> cumulative;
    for (const auto& [errors, group] : groups) {
        const auto state = evolve(cc, errors);
        cumulative.resize(state.size());
        double acc = 0.0;
        for (std::size_t i = 0; i < state.size(); ++i) {
            acc += std::norm(state[i]);
            cumulative[i] = acc;
        }
        for (const Shot& s : group) {
            auto it = std::upper_bound(cumulative.begin(), cumulative.end(), s.variate * acc);
            if (it == cumulative.end()) {
                --it;
            }
            ++by_index[static_cast<std::size_t>(it - cumulative.begin()) ^ s.flip];
        }
    }
    for (const auto& [index, n] : by_index) {
        out.add(cc.key_of(index), n);
    }
    return out;
}

Distribution ideal_distribution(const Circuit& c) {
    const CompiledCircuit cc = compile(c);
    const auto state = evolve(cc, {});
    Distribution out;
    for (std::size_t i = 0; i < state.size(); ++i) {
        const double p = std::norm(state[i]);
        if (p > kProbabilityFloor) {
            out[cc.key_of(i)] += p;
        }
    }
    return out;
}

}  // namespace pcs
