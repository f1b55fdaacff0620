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

#include "pcsmp/unitary.hpp"

#include <cmath>
#include <span>

#include <fmt/format.h>

#include "pcsmp/errors.hpp"

namespace pcs {

namespace {

std::span<Amplitude> column(DenseMatrix& m, Eigen::Index j) {
    return {m.data() + j * m.rows(), static_cast<std::size_t>(m.rows())};
}

}  // namespace

DenseMatrix unitary_of(const Circuit& c) {
    if (c.num_qubits() > kMaxUnitaryQubits) {
        throw CapacityError(fmt::format("unitary_of: {} qubits exceeds the limit of {}", c.num_qubits(), kMaxUnitaryQubits));
    }
    if (c.has_measurement()) {
        throw NonUnitaryError("unitary_of: circuit contains MEASURE");
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << c.num_qubits());
    DenseMatrix u = DenseMatrix::Identity(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        auto col = column(u, j);
        for (const auto& g : c.gates()) {
            apply_gate(col, g);
        }
    }
    return u;
}

DenseMatrix pauli_string_matrix(const PauliString& p) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << p.size());
    DenseMatrix m = DenseMatrix::Identity(dim, dim) * p.phase();
    for (Eigen::Index j = 0; j < dim; ++j) {
        auto col = column(m, j);
        for (std::size_t q = 0; q < p.size(); ++q) {
            apply_pauli(col, q, p[q]);
        }
    }
    return m;
}

std::optional<Amplitude> global_phase_between(const DenseMatrix& a, const DenseMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("global_phase_between: matrix shapes differ");
    }
    // Take the phase from the largest entry of b to stay well conditioned.
    Eigen::Index r = 0;
    Eigen::Index col = 0;
    b.cwiseAbs().maxCoeff(&r, &col);
    if (std::abs(b(r, col)) <= tol) {
        return std::nullopt;
    }
    const Amplitude c = a(r, col) / b(r, col);
    if (std::abs(std::abs(c) - 1.0) > tol) {
        return std::nullopt;
    }
    if ((a - c * b).cwiseAbs().maxCoeff() > tol) {
        return std::nullopt;
    }
    return c;
}

double phase_insensitive_overlap(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("phase_insensitive_overlap: matrix shapes differ");
    }
    return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

}  // namespace pcs
