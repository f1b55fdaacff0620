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

// Helpers shared by the test binaries. Oracles here are written directly
// against matrix definitions so they do not share code with the library.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "pcsmp/circuit.hpp"
#include "pcsmp/pauli_string.hpp"

namespace pcs::testing {

using Cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

inline Eigen::Matrix2cd pauli2(Pauli p) {
    Eigen::Matrix2cd m;
    switch (p) {
        case Pauli::I: m << 1, 0, 0, 1; break;
        case Pauli::X: m << 0, 1, 1, 0; break;
        case Pauli::Y: m << 0, Cd(0, -1), Cd(0, 1), 0; break;
        case Pauli::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

// Dense matrix of a Pauli string, entry by entry: qubit q acts on bit q of
// the row and column index.
inline Mat pauli_oracle(const PauliString& p) {
    const std::size_t n = p.size();
    const std::size_t dim = std::size_t{1} << n;
    std::array<Cd, 4> phases{Cd(1, 0), Cd(0, 1), Cd(-1, 0), Cd(0, -1)};
    Mat m = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            Cd v = phases[p.log_i()];
            for (std::size_t q = 0; q < n && v != Cd(0); ++q) {
                v *= pauli2(p[q])((r >> q) & 1u, (c >> q) & 1u);
            }
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
        }
    }
    return m;
}

// 2^n matrix applying u to `target` when every qubit in `controls` is 1.
inline Mat embed(const Eigen::Matrix2cd& u, std::size_t target, const std::vector<std::size_t>& controls,
                 std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    Mat m = Mat::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t c = 0; c < dim; ++c) {
        bool active = true;
        for (auto q : controls) {
            active = active && ((c >> q) & 1u);
        }
        if (!active) {
            m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c)) = 1;
            continue;
        }
        const std::size_t b = (c >> target) & 1u;
        for (std::size_t a = 0; a < 2; ++a) {
            const std::size_t r = (c & ~(std::size_t{1} << target)) | (a << target);
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = u(a, b);
        }
    }
    return m;
}

inline Eigen::Matrix2cd gate2(GateKind kind, double theta = 0.0) {
    const double s = 1.0 / std::sqrt(2.0);
    const Cd i(0, 1);
    Eigen::Matrix2cd m;
    switch (kind) {
        case GateKind::H: m << s, s, s, -s; break;
        case GateKind::X: return pauli2(Pauli::X);
        case GateKind::Y: return pauli2(Pauli::Y);
        case GateKind::Z: return pauli2(Pauli::Z);
        case GateKind::S: m << 1, 0, 0, i; break;
        case GateKind::Sdg: m << 1, 0, 0, -i; break;
        case GateKind::T: m << 1, 0, 0, std::exp(i * (M_PI / 4)); break;
        case GateKind::Tdg: m << 1, 0, 0, std::exp(-i * (M_PI / 4)); break;
        case GateKind::SX: m << Cd(0.5, 0.5), Cd(0.5, -0.5), Cd(0.5, -0.5), Cd(0.5, 0.5); break;
        case GateKind::RZ: m << std::exp(-i * (theta / 2)), 0, 0, std::exp(i * (theta / 2)); break;
        default: throw std::invalid_argument("gate2: not a single-qubit gate");
    }
    return m;
}

// Unitary of a measurement-free circuit built from the embeddings above.
inline Mat circuit_oracle(const Circuit& c) {
    const std::size_t n = c.num_qubits();
    Mat u = Mat::Identity(1 << n, 1 << n);
    for (const auto& g : c.gates()) {
        Mat step;
        switch (g.kind) {
            case GateKind::CX:
                step = embed(pauli2(Pauli::X), g.qubits[1], {g.qubits[0]}, n);
                break;
            case GateKind::CCX:
                step = embed(pauli2(Pauli::X), g.qubits[2], {g.qubits[0], g.qubits[1]}, n);
                break;
            case GateKind::ControlledPauli:
                step = embed(pauli2(g.pauli), g.qubits[1], {g.qubits[0]}, n);
                break;
            default:
                step = embed(gate2(g.kind, g.theta), g.qubits[0], {}, n);
        }
        u = step * u;
    }
    return u;
}

inline double max_abs_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

// True when a == c b for a unit scalar c.
inline bool equal_up_to_phase(const Mat& a, const Mat& b, double tol = 1e-9) {
    Eigen::Index r = 0;
    Eigen::Index col = 0;
    b.cwiseAbs().maxCoeff(&r, &col);
    if (std::abs(b(r, col)) < 1e-12) {
        return a.cwiseAbs().maxCoeff() < tol;
    }
    const Cd c = a(r, col) / b(r, col);
    return std::abs(std::abs(c) - 1.0) < tol && max_abs_diff(a, c * b) < tol;
}

inline PauliString random_pauli(std::size_t n, std::mt19937_64& rng, bool hermitian = false) {
    std::uniform_int_distribution<int> op(0, 3);
    PauliString p(n);
    for (std::size_t q = 0; q < n; ++q) {
        p.set(q, static_cast<Pauli>(op(rng)));
    }
    const int k = op(rng);
    p.set_log_i(static_cast<std::uint8_t>(hermitian ? (k & 2) : k));
    return p;
}

inline Circuit random_clifford(std::size_t n, std::size_t depth, std::mt19937_64& rng) {
    static constexpr GateKind kinds[] = {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X,
                                         GateKind::Y, GateKind::Z, GateKind::CX};
    std::uniform_int_distribution<std::size_t> pick(0, n >= 2 ? 6 : 5);
    std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
    Circuit c(n);
    for (std::size_t i = 0; i < depth; ++i) {
        const GateKind k = kinds[pick(rng)];
        if (k == GateKind::CX) {
            const std::size_t a = qubit(rng);
            std::size_t b = qubit(rng);
            while (b == a) {
                b = qubit(rng);
            }
            c.append(Gate::cx(a, b));
        } else {
            c.append(Gate::single(k, qubit(rng)));
        }
    }
    return c;
}

// Adds T/Tdg/RZ/CCX gates on top of a Clifford circuit.
inline Circuit random_universal(std::size_t n, std::size_t depth, std::mt19937_64& rng) {
    Circuit c = random_clifford(n, depth, rng);
    std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
    std::uniform_int_distribution<int> choice(0, 3);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    Circuit out(n);
    for (const auto& g : c.gates()) {
        out.append(g);
        switch (choice(rng)) {
            case 0: out.append(Gate::single(GateKind::T, qubit(rng))); break;
            case 1: out.append(Gate::rz(qubit(rng), angle(rng))); break;
            case 2: out.append(Gate::single(GateKind::SX, qubit(rng))); break;
            default: break;
        }
    }
    if (n >= 3) {
        out.append(Gate::ccx(0, 1, 2));
    }
    return out;
}

}  // namespace pcs::testing
