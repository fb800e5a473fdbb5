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

#ifndef MONCODE_CLIFFORD_MAP_H
#define MONCODE_CLIFFORD_MAP_H

#include "moncode/tableau.h"

namespace moncode {

// Clifford unitary U tracked in the Heisenberg picture by the signed images
// U X_q U^dag and U Z_q U^dag.
class CliffordMap {
  public:
    explicit CliffordMap(size_t n);
    static CliffordMap identity(size_t n) {
        return CliffordMap(n);
    }

    size_t num_qubits() const {
        return n_;
    }
    const PauliString &image_of_x(size_t q) const {
        return img_x_.at(q);
    }
    const PauliString &image_of_z(size_t q) const {
        return img_z_.at(q);
    }

    // U p U^dag.
    PauliString image(const PauliString &p) const;

    // Map acting at qubit positions offset..offset+n-1 of a larger register,
    // identity elsewhere.
    CliffordMap embedded(size_t total_qubits, size_t offset) const;

    // Post-compose with a gate V: the map becomes V U.
    void then_h(size_t q);
    void then_s(size_t q);
    void then_cnot(size_t control, size_t target);
    void then_cz(size_t a, size_t b);
    void then_swap(size_t a, size_t b);
    void then_pauli(const PauliString &p);
    void then_two_qubit(size_t a, size_t b, const TwoQubitClifford &g);

    // Pre-compose with a gate V: the map becomes U V.
    void pre_two_qubit(size_t a, size_t b, const TwoQubitClifford &g);

  private:
    size_t n_;
    std::vector<PauliString> img_x_, img_z_;
};

}  // namespace moncode

#endif
