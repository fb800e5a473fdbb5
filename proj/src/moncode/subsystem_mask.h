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

#ifndef MONCODE_SUBSYSTEM_MASK_H
#define MONCODE_SUBSYSTEM_MASK_H

#include <stdexcept>

#include "moncode/bitvec.h"

namespace moncode {

// Subset of qubit indices out of a fixed total.
struct SubsystemMask {
    size_t num_qubits = 0;
    BitVec bits;

    SubsystemMask() = default;
    explicit SubsystemMask(size_t num_qubits) : num_qubits(num_qubits), bits(num_qubits) {
    }

    static SubsystemMask from_indices(size_t num_qubits, const std::vector<size_t> &indices) {
        SubsystemMask m(num_qubits);
        for (size_t q : indices) {
            if (q >= num_qubits) {
                throw std::out_of_range("Subsystem index out of range.");
            }
            m.bits.set(q, true);
        }
        return m;
    }

    static SubsystemMask contiguous(size_t num_qubits, size_t start, size_t len) {
        if (start + len > num_qubits) {
            throw std::out_of_range("Contiguous window out of range.");
        }
        SubsystemMask m(num_qubits);
        for (size_t q = start; q < start + len; q++) {
            m.bits.set(q, true);
        }
        return m;
    }

    static SubsystemMask full(size_t num_qubits) {
        return contiguous(num_qubits, 0, num_qubits);
    }

    SubsystemMask complement() const {
        SubsystemMask m(num_qubits);
        for (size_t q = 0; q < num_qubits; q++) {
            m.bits.set(q, !bits.get(q));
        }
        return m;
    }

    size_t size() const {
        return bits.popcount();
    }

    bool contains(size_t q) const {
        return q < num_qubits && bits.get(q);
    }

    std::vector<size_t> indices() const {
        std::vector<size_t> result;
        for (size_t q = 0; q < num_qubits; q++) {
            if (bits.get(q)) {
                result.push_back(q);
            }
        }
        return result;
    }
};

}  // namespace moncode

#endif
