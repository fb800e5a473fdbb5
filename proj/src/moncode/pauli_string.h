// Copyright 2026 The moncode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MONCODE_PAULI_STRING_H
#define MONCODE_PAULI_STRING_H

#include "moncode/bitvec.h"
#include "moncode/subsystem_mask.h"

namespace moncode {

// Signed Pauli operator on num_qubits qubits.
//
// The operator is i^phase * H(x, z) where H(x, z) is the Hermitian product
// of single-qubit factors I, X, Y = i*X*Z, Z picked by the (x, z) bit pairs.
// Hermitian operators therefore carry phase 0 (+) or 2 (-); phases 1 and 3
// only arise transiently from products of anticommuting operators.
struct PauliString {
    size_t num_qubits = 0;
    uint8_t phase = 0;
    BitVec x, z;

    PauliString() = default;
    explicit PauliString(size_t num_qubits)
        : num_qubits(num_qubits), x(num_qubits), z(num_qubits) {
    }

    static PauliString identity(size_t num_qubits) {
        return PauliString(num_qubits);
    }

    // Parses "+XIZ", "-YY", "XZ" (implicit +), "iX", "-iZ".
    static PauliString from_str(const std::string &text);

    // Single-qubit factor at position q in an n-qubit identity background.
    static PauliString single(size_t num_qubits, size_t q, char which);

    bool is_identity() const {
        return x.is_zero() && z.is_zero();
    }
    bool is_hermitian() const {
        return (phase & 1) == 0;
    }
    // +1 or -1; requires a Hermitian operator.
    int sign() const;

    bool commutes(const PauliString &other) const;
    PauliString operator*(const PauliString &other) const;
    // Complex conjugate: flips the sign when the Y count is odd.
    PauliString conjugate() const;

    char pauli_char_at(size_t q) const;
    size_t weight() const;

    // Length-2n bit row (x_0..x_{n-1}, z_0..z_{n-1}); drops sign.
    BitVec symplectic_bits() const;

    bool is_supported_on(const SubsystemMask &mask) const;
    // Compacts the factors at mask positions (ascending) onto mask.size()
    // qubits, keeping the stored phase. Factors outside the mask are dropped,
    // which only preserves the operator when it is supported on the mask.
    PauliString restricted_to(const SubsystemMask &mask) const;
    // Places this operator at qubit positions offset..offset+n-1 of a larger
    // identity background.
    PauliString embedded(size_t total_qubits, size_t offset) const;

    bool operator==(const PauliString &other) const {
        return num_qubits == other.num_qubits && phase == other.phase && x == other.x &&
               z == other.z;
    }
    bool operator!=(const PauliString &other) const {
        return !(*this == other);
    }
    bool operator<(const PauliString &other) const;

    // e.g. "+XIY", "-ZZ", "iXZ".
    std::string str() const;
};

}  // namespace moncode

#endif
