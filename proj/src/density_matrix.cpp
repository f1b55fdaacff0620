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

#include "pcsmp/density_matrix.hpp"

#include <span>
#include <vector>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "pcsmp/errors.hpp"
#include "pcsmp/gate_kernels.hpp"

namespace pcs {

namespace {

using Rho = Eigen::MatrixXcd;

template <typename Fn>
void for_each_column(Rho& m, Fn&& fn) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        fn(std::span<Amplitude>(m.data() + j * m.rows(), static_cast<std::size_t>(m.rows())));
    }
}

// rho -> A rho A^dag for any A given as a column action.
template <typename Fn>
void conjugate(Rho& rho, Fn&& act) {
    for_each_column(rho, act);
    rho = rho.adjoint().eval();
    for_each_column(rho, act);
}

void depolarize(Rho& rho, const std::vector<std::size_t>& qubits, double p) {
    if (p == 0.0) {
        return;
    }
    const unsigned k = static_cast<unsigned>(qubits.size());
    const unsigned num_paulis = (1u << (2 * k)) - 1;
    Rho mixed = Rho::Zero(rho.rows(), rho.cols());
    for (unsigned code = 1; code <= num_paulis; ++code) {
        Rho term = rho;
        conjugate(term, [&](std::span<Amplitude> col) {
            for (unsigned i = 0; i < k; ++i) {
                apply_pauli(col, qubits[i], static_cast<Pauli>((code >> (2 * i)) & 3u));
            }
        });
        mixed += term;
    }
    rho = (1.0 - p) * rho + (p / num_paulis) * mixed;
}

}  // namespace

Distribution density_matrix_reference(const Circuit& c, const NoiseSpec& noise) {
    noise.validate();
    if (c.num_qubits() > kMaxDensityMatrixQubits) {
        throw CapacityError(
            fmt::format("density_matrix_reference: {} qubits exceeds the limit of {}", c.num_qubits(), kMaxDensityMatrixQubits));
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << c.num_qubits());
    Rho rho = Rho::Zero(dim, dim);
    rho(0, 0) = 1.0;

    std::vector<std::pair<std::size_t, std::size_t>> measurements;
    for (const auto& g : c.gates()) {
        if (g.kind == GateKind::Measure) {
            measurements.emplace_back(g.qubits[0], *g.clbit);
            continue;
        }
        conjugate(rho, [&](std::span<Amplitude> col) { apply_gate(col, g); });
        if (!is_noisy(g.kind)) {
            continue;
        }
        if (g.qubits.size() > 2) {
            if (!noise.noiseless()) {
                throw UnsupportedGateError(fmt::format("no noise model for {}-qubit gate {}", g.qubits.size(), gate_name(g.kind)));
            }
            continue;
        }
        depolarize(rho, g.qubits, g.qubits.size() == 1 ? noise.p1 : noise.p2);
    }
    if (measurements.empty()) {
        throw ContractError("density_matrix_reference: circuit has no MEASURE gates");
    }

    Distribution out;
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double p = rho(i, i).real();
        if (p <= 1e-15) {
            continue;
        }
        std::string key(c.num_clbits(), '0');
        for (auto [q, cb] : measurements) {
            key[cb] = ((static_cast<std::size_t>(i) >> q) & 1u) ? '1' : '0';
        }
        out[key] += p;
    }
    return out;
}

}  // namespace pcs
