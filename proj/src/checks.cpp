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

#include "pcsmp/checks.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "pcsmp/clifford.hpp"
#include "pcsmp/errors.hpp"
#include "pcsmp/unitary.hpp"

namespace pcs {

namespace {

void require_width(const PauliString& p, const Circuit& u, const char* what) {
    if (p.size() != u.num_qubits()) {
        throw ShapeError(fmt::format("{} has {} qubits, payload has {}", what, p.size(), u.num_qubits()));
    }
}

std::optional<Amplitude> dense_check_phase(const PauliString& left, const PauliString& right, const Circuit& u) {
    const DenseMatrix um = unitary_of(u);
    const DenseMatrix sandwiched = pauli_string_matrix(right) * um * pauli_string_matrix(left);
    return global_phase_between(sandwiched, um);
}

}  // namespace

CheckPair CheckPair::make(PauliString left, PauliString right) {
    if (left.size() != right.size()) {
        throw ShapeError(fmt::format("check sides differ in length ({} vs {})", left.size(), right.size()));
    }
    if (!left.is_hermitian() || !right.is_hermitian()) {
        throw InvalidParameterError(fmt::format("check pair {} / {} is not Hermitian", left.str(), right.str()));
    }
    if (left.is_identity_ops() || right.is_identity_ops()) {
        throw InvalidParameterError(fmt::format("check pair {} / {} has an identity side", left.str(), right.str()));
    }
    std::vector<std::size_t> support = left.support();
    for (auto q : right.support()) {
        if (std::ranges::find(support, q) == support.end()) {
            support.push_back(q);
        }
    }
    std::ranges::sort(support);
    return CheckPair{std::move(left), std::move(right), std::move(support)};
}

CheckPair CheckPair::parse(std::string_view left, std::string_view right) {
    return make(PauliString::from_str(left), PauliString::from_str(right));
}

bool validate_check_pair(const PauliString& left, const PauliString& right, const Circuit& u) {
    require_width(left, u, "left check");
    require_width(right, u, "right check");
    return dense_check_phase(left, right, u).has_value();
}

PauliString synthesize_right_check(const PauliString& left, const Circuit& u) {
    require_width(left, u, "left check");
    return conjugate_through_clifford(left, u);
}

std::optional<Amplitude> kickback_phase(const CheckPair& check, const Circuit& u) {
    require_width(check.left, u, "left check");
    require_width(check.right, u, "right check");
    const PauliString left = check.left.ops_only();
    const PauliString right = check.right.ops_only();
    if (u.is_clifford()) {
        // R U L = R (U L U^dag) U, and U L U^dag = s * P for a sign s.
        const PauliString image = conjugate_through_clifford(left, u);
        if (image.ops_only() != right) {
            return std::nullopt;
        }
        return image.phase();
    }
    return dense_check_phase(left, right, u);
}

bool detect_rate_theoretical(const CheckPair& check, const PauliString& error) {
    return !commutes(error, check.right);
}

std::vector<CheckPair> auto_edge_checks(const Circuit& u) {
    const std::size_t n = u.num_qubits();
    if (n == 0) {
        throw ConstructionError("auto-edge checks need a non-empty payload");
    }
    std::vector<std::size_t> edges = {0};
    if (n > 1) {
        edges.push_back(n - 1);
    }
    std::vector<CheckPair> out;
    for (auto q : edges) {
        bool placed = false;
        for (Pauli p : {Pauli::X, Pauli::Z}) {
            const PauliString single = PauliString::single(n, q, p);
            if (validate_check_pair(single, single, u)) {
                out.push_back(CheckPair::make(single, single));
                placed = true;
                break;
            }
        }
        if (!placed) {
            throw ConstructionError(fmt::format("auto-edge: neither X nor Z on qubit {} satisfies R U L = U", q));
        }
    }
    return out;
}

}  // namespace pcs
