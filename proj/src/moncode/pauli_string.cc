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

#include "moncode/pauli_string.h"

#include <bit>
#include <stdexcept>

namespace moncode {

PauliString PauliString::from_str(const std::string &text) {
    size_t k = 0;
    uint8_t phase = 0;
    bool negated = false;
    if (k < text.size() && (text[k] == '+' || text[k] == '-')) {
        negated = text[k] == '-';
        k++;
    }
    if (k < text.size() && text[k] == 'i') {
        phase = 1;
        k++;
    }
    PauliString result(text.size() - k);
    result.phase = (phase + (negated ? 2 : 0)) & 3;
    for (size_t q = 0; k < text.size(); k++, q++) {
        switch (text[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                result.x.set(q, true);
                break;
            case 'Y':
                result.x.set(q, true);
                result.z.set(q, true);
                break;
            case 'Z':
                result.z.set(q, true);
                break;
            default:
                throw std::invalid_argument("Bad pauli character in: " + text);
        }
    }
    return result;
}

PauliString PauliString::single(size_t num_qubits, size_t q, char which) {
    if (q >= num_qubits) {
        throw std::out_of_range("Qubit index out of range.");
    }
    PauliString result(num_qubits);
    switch (which) {
        case 'X':
            result.x.set(q, true);
            break;
        case 'Y':
            result.x.set(q, true);
            result.z.set(q, true);
            break;
        case 'Z':
            result.z.set(q, true);
            break;
        default:
            throw std::invalid_argument("Pauli factor must be X, Y, or Z.");
    }
    return result;
}

int PauliString::sign() const {
    if (phase & 1) {
        throw std::logic_error("sign() requires a Hermitian operator.");
    }
    return phase == 0 ? +1 : -1;
}

bool PauliString::commutes(const PauliString &other) const {
    if (num_qubits != other.num_qubits) {
        throw std::invalid_argument("Qubit count mismatch in commutes().");
    }
    size_t crossings = x.and_popcount(other.z) + z.and_popcount(other.x);
    return (crossings & 1) == 0;
}

PauliString PauliString::operator*(const PauliString &other) const {
    if (num_qubits != other.num_qubits) {
        throw std::invalid_argument("Qubit count mismatch in pauli product.");
    }
    PauliString result(num_qubits);
    size_t quarter_turns = phase + other.phase;
    for (size_t w = 0; w < x.words.size(); w++) {
        uint64_t x1 = x.words[w], z1 = z.words[w];
        uint64_t x2 = other.x.words[w], z2 = other.z.words[w];
        // Single-qubit factors multiply as H(a)H(b) = i^t H(a^b) where t is
        // +1 along the X->Y->Z->X cycle and -1 against it.
        uint64_t forward = (x1 & ~z1 & x2 & z2) | (x1 & z1 & ~x2 & z2) | (~x1 & z1 & x2 & ~z2);
        uint64_t anti = (x1 & z2) ^ (z1 & x2);
        quarter_turns += std::popcount(forward);
        quarter_turns += 3 * std::popcount(anti & ~forward);
        result.x.words[w] = x1 ^ x2;
        result.z.words[w] = z1 ^ z2;
    }
    result.phase = quarter_turns & 3;
    return result;
}

PauliString PauliString::conjugate() const {
    PauliString result = *this;
    size_t y_count = x.and_popcount(z);
    result.phase = ((4 - phase) + 2 * (y_count & 1)) & 3;
    return result;
}

char PauliString::pauli_char_at(size_t q) const {
    bool xq = x.get(q), zq = z.get(q);
    return xq ? (zq ? 'Y' : 'X') : (zq ? 'Z' : 'I');
}

size_t PauliString::weight() const {
    size_t total = 0;
    for (size_t w = 0; w < x.words.size(); w++) {
        total += std::popcount(x.words[w] | z.words[w]);
    }
    return total;
}

BitVec PauliString::symplectic_bits() const {
    BitVec row(2 * num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        row.set(q, x.get(q));
        row.set(num_qubits + q, z.get(q));
    }
    return row;
}

bool PauliString::is_supported_on(const SubsystemMask &mask) const {
    if (num_qubits != mask.num_qubits) {
        throw std::invalid_argument("Qubit count mismatch in is_supported_on().");
    }
    for (size_t w = 0; w < x.words.size(); w++) {
        if ((x.words[w] | z.words[w]) & ~mask.bits.words[w]) {
            return false;
        }
    }
    return true;
}

PauliString PauliString::restricted_to(const SubsystemMask &mask) const {
    if (num_qubits != mask.num_qubits) {
        throw std::invalid_argument("Qubit count mismatch in restricted_to().");
    }
    PauliString result(mask.size());
    result.phase = phase;
    size_t out = 0;
    for (size_t q = 0; q < num_qubits; q++) {
        if (mask.bits.get(q)) {
            result.x.set(out, x.get(q));
            result.z.set(out, z.get(q));
            out++;
        }
    }
    return result;
}

PauliString PauliString::embedded(size_t total_qubits, size_t offset) const {
    if (offset + num_qubits > total_qubits) {
        throw std::out_of_range("Embedding window out of range.");
    }
    PauliString result(total_qubits);
    result.phase = phase;
    for (size_t q = 0; q < num_qubits; q++) {
        result.x.set(offset + q, x.get(q));
        result.z.set(offset + q, z.get(q));
    }
    return result;
}

bool PauliString::operator<(const PauliString &other) const {
    if (num_qubits != other.num_qubits) {
        return num_qubits < other.num_qubits;
    }
    if (x != other.x) {
        return x < other.x;
    }
    if (z != other.z) {
        return z < other.z;
    }
    return phase < other.phase;
}

std::string PauliString::str() const {
    std::string result;
    switch (phase) {
        case 0:
            result = "+";
            break;
        case 1:
            result = "i";
            break;
        case 2:
            result = "-";
            break;
        case 3:
            result = "-i";
            break;
    }
    for (size_t q = 0; q < num_qubits; q++) {
        result.push_back(pauli_char_at(q));
    }
    return result;
}

}  // namespace moncode
