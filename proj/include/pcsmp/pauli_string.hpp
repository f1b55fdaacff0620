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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pcs {

// Single-qubit Pauli label. Bit 0 is the X component and bit 1 the Z
// component, so XOR of two labels gives the label of their product.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

// An n-qubit Pauli operator  i^k * P_0 (x) P_1 (x) ... (x) P_{n-1}  where each
// P_q is one of the Hermitian matrices {I, X, Y, Z} and k in {0,1,2,3}.
//
// Stored in symplectic form: one x bit and one z bit per qubit plus the
// exponent k. All arithmetic is exact.
class PauliString {
public:
    PauliString() = default;
    explicit PauliString(std::size_t num_qubits);

    // Parses "+XIZ", "-iXY", "iZ", "X.Z_". Accepted identity letters are
    // 'I', '.' and '_'. A missing sign means +1. Qubit 0 is leftmost. Throws
    // InvalidParameterError on other letters or when no qubits are given.
    static PauliString from_str(std::string_view text);
    static PauliString single(std::size_t num_qubits, std::size_t qubit, Pauli p);

    std::size_t size() const { return x_.size(); }
    Pauli operator[](std::size_t qubit) const;
    void set(std::size_t qubit, Pauli p);

    // Exponent k of the leading i^k.
    std::uint8_t log_i() const { return log_i_; }
    void set_log_i(std::uint8_t k) { log_i_ = k & 3u; }
    void negate() { log_i_ = (log_i_ + 2) & 3u; }
    std::complex<double> phase() const;

    bool is_hermitian() const { return (log_i_ & 1u) == 0; }
    // True when every factor is I (the phase is ignored).
    bool is_identity_ops() const;
    std::size_t weight() const;
    std::vector<std::size_t> support() const;

    // Same operator factors with phase reset to +1.
    PauliString ops_only() const;

    std::string str() const;

    const std::vector<std::uint8_t>& x_bits() const { return x_; }
    const std::vector<std::uint8_t>& z_bits() const { return z_; }

    friend bool operator==(const PauliString& a, const PauliString& b) = default;

private:
    friend class PauliConjugator;
    friend PauliString pauli_mul(const PauliString& a, const PauliString& b);

    std::vector<std::uint8_t> x_;
    std::vector<std::uint8_t> z_;
    std::uint8_t log_i_ = 0;
};

// Group product a*b. Throws ShapeError on a length mismatch.
PauliString pauli_mul(const PauliString& a, const PauliString& b);

inline PauliString operator*(const PauliString& a, const PauliString& b) { return pauli_mul(a, b); }

// True iff a*b == b*a. Throws ShapeError on a length mismatch.
bool commutes(const PauliString& a, const PauliString& b);

}  // namespace pcs
