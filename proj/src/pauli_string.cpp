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

#include "pcsmp/pauli_string.hpp"

#include <fmt/format.h>

#include "pcsmp/errors.hpp"

namespace pcs {

namespace {

// Exponent of i picked up by the single-qubit product sigma_a * sigma_b of
// Hermitian Paulis, in {-1, 0, 1}.
int product_log_i(unsigned x1, unsigned z1, unsigned x2, unsigned z2) {
    if (!x1 && !z1) {
        return 0;
    }
    if (x1 && z1) {
        return static_cast<int>(z2) - static_cast<int>(x2);
    }
    if (x1) {
        return static_cast<int>(z2) * (2 * static_cast<int>(x2) - 1);
    }
    return static_cast<int>(x2) * (1 - 2 * static_cast<int>(z2));
}

void require_same_length(const PauliString& a, const PauliString& b, const char* op) {
    if (a.size() != b.size()) {
        throw ShapeError(fmt::format("{}: length mismatch ({} vs {})", op, a.size(), b.size()));
    }
}

}  // namespace

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
        case '.':
        case '_': return Pauli::I;
        case 'X': return Pauli::X;
        case 'Y': return Pauli::Y;
        case 'Z': return Pauli::Z;
        default: throw InvalidParameterError(fmt::format("not a Pauli label: '{}'", c));
    }
}

PauliString::PauliString(std::size_t num_qubits) : x_(num_qubits, 0), z_(num_qubits, 0) {}

PauliString PauliString::from_str(std::string_view text) {
    std::uint8_t k = 0;
    if (text.starts_with("+")) {
        text.remove_prefix(1);
    } else if (text.starts_with("-")) {
        k = 2;
        text.remove_prefix(1);
    }
    if (text.starts_with("i")) {
        k = (k + 1) & 3u;
        text.remove_prefix(1);
    }
    if (text.empty()) {
        throw InvalidParameterError("Pauli string has no qubits");
    }
    PauliString out(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) {
        out.set(q, pauli_from_char(text[q]));
    }
    out.log_i_ = k;
    return out;
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t qubit, Pauli p) {
    if (qubit >= num_qubits) {
        throw ShapeError(fmt::format("qubit {} out of range for {} qubits", qubit, num_qubits));
    }
    PauliString out(num_qubits);
    out.set(qubit, p);
    return out;
}

Pauli PauliString::operator[](std::size_t qubit) const {
    return static_cast<Pauli>(x_.at(qubit) | (z_.at(qubit) << 1));
}

void PauliString::set(std::size_t qubit, Pauli p) {
    const auto bits = static_cast<std::uint8_t>(p);
    x_.at(qubit) = bits & 1u;
    z_.at(qubit) = (bits >> 1) & 1u;
}

std::complex<double> PauliString::phase() const {
    switch (log_i_) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

bool PauliString::is_identity_ops() const {
    for (std::size_t q = 0; q < size(); ++q) {
        if (x_[q] || z_[q]) {
            return false;
        }
    }
    return true;
}

std::size_t PauliString::weight() const {
    std::size_t w = 0;
    for (std::size_t q = 0; q < size(); ++q) {
        w += (x_[q] | z_[q]);
    }
    return w;
}

std::vector<std::size_t> PauliString::support() const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < size(); ++q) {
        if (x_[q] || z_[q]) {
            out.push_back(q);
        }
    }
    return out;
}

PauliString PauliString::ops_only() const {
    PauliString out = *this;
    out.log_i_ = 0;
    return out;
}

std::string PauliString::str() const {
    static constexpr const char* prefixes[] = {"+", "i", "-", "-i"};
    std::string out = prefixes[log_i_];
    out.reserve(out.size() + size());
    for (std::size_t q = 0; q < size(); ++q) {
        out.push_back(pauli_char((*this)[q]));
    }
    return out;
}

PauliString pauli_mul(const PauliString& a, const PauliString& b) {
    require_same_length(a, b, "pauli_mul");
    PauliString out(a.size());
    int k = a.log_i_ + b.log_i_;
    for (std::size_t q = 0; q < a.size(); ++q) {
        k += product_log_i(a.x_[q], a.z_[q], b.x_[q], b.z_[q]);
        out.x_[q] = a.x_[q] ^ b.x_[q];
        out.z_[q] = a.z_[q] ^ b.z_[q];
    }
    out.log_i_ = static_cast<std::uint8_t>(((k % 4) + 4) % 4);
    return out;
}

bool commutes(const PauliString& a, const PauliString& b) {
    require_same_length(a, b, "commutes");
    unsigned anti = 0;
    const auto& ax = a.x_bits();
    const auto& az = a.z_bits();
    const auto& bx = b.x_bits();
    const auto& bz = b.z_bits();
    for (std::size_t q = 0; q < a.size(); ++q) {
        anti ^= (ax[q] & bz[q]) ^ (az[q] & bx[q]);
    }
    return anti == 0;
}

}  // namespace pcs
