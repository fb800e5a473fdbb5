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

#include "moncode/clifford_map.h"

namespace moncode {

CliffordMap::CliffordMap(size_t n) : n_(n) {
    img_x_.reserve(n);
    img_z_.reserve(n);
    for (size_t q = 0; q < n; q++) {
        img_x_.push_back(PauliString::single(n, q, 'X'));
        img_z_.push_back(PauliString::single(n, q, 'Z'));
    }
}

PauliString CliffordMap::image(const PauliString &p) const {
    if (p.num_qubits != n_) {
        throw std::invalid_argument("Qubit count mismatch in CliffordMap::image().");
    }
    PauliString result = PauliString::identity(n_);
    uint8_t extra = 0;
    for (size_t q = 0; q < n_; q++) {
        bool xb = p.x.get(q);
        bool zb = p.z.get(q);
        if (xb) {
            result = result * img_x_[q];
        }
        if (zb) {
            result = result * img_z_[q];
        }
        if (xb && zb) {
            // The canonical factor at q is i * X_q * Z_q.
            extra++;
        }
    }
    result.phase = (result.phase + p.phase + extra) & 3;
    return result;
}

CliffordMap CliffordMap::embedded(size_t total_qubits, size_t offset) const {
    CliffordMap big(total_qubits);
    for (size_t q = 0; q < n_; q++) {
        big.img_x_[offset + q] = img_x_[q].embedded(total_qubits, offset);
        big.img_z_[offset + q] = img_z_[q].embedded(total_qubits, offset);
    }
    return big;
}

void CliffordMap::then_h(size_t q) {
    for (size_t i = 0; i < n_; i++) {
        conj_h(img_x_[i], q);
        conj_h(img_z_[i], q);
    }
}

void CliffordMap::then_s(size_t q) {
    for (size_t i = 0; i < n_; i++) {
        conj_s(img_x_[i], q);
        conj_s(img_z_[i], q);
    }
}

void CliffordMap::then_cnot(size_t control, size_t target) {
    for (size_t i = 0; i < n_; i++) {
        conj_cnot(img_x_[i], control, target);
        conj_cnot(img_z_[i], control, target);
    }
}

void CliffordMap::then_cz(size_t a, size_t b) {
    for (size_t i = 0; i < n_; i++) {
        conj_cz(img_x_[i], a, b);
        conj_cz(img_z_[i], a, b);
    }
}

void CliffordMap::then_swap(size_t a, size_t b) {
    for (size_t i = 0; i < n_; i++) {
        conj_swap(img_x_[i], a, b);
        conj_swap(img_z_[i], a, b);
    }
}

void CliffordMap::then_pauli(const PauliString &p) {
    for (size_t i = 0; i < n_; i++) {
        if (!img_x_[i].commutes(p)) {
            img_x_[i].phase = (img_x_[i].phase + 2) & 3;
        }
        if (!img_z_[i].commutes(p)) {
            img_z_[i].phase = (img_z_[i].phase + 2) & 3;
        }
    }
}

void CliffordMap::then_two_qubit(size_t a, size_t b, const TwoQubitClifford &g) {
    for (size_t i = 0; i < n_; i++) {
        conj_two_qubit(img_x_[i], a, b, g);
        conj_two_qubit(img_z_[i], a, b, g);
    }
}

void CliffordMap::pre_two_qubit(size_t a, size_t b, const TwoQubitClifford &g) {
    PauliString xa = PauliString::single(n_, a, 'X');
    PauliString za = PauliString::single(n_, a, 'Z');
    PauliString xb = PauliString::single(n_, b, 'X');
    PauliString zb = PauliString::single(n_, b, 'Z');
    conj_two_qubit(xa, a, b, g);
    conj_two_qubit(za, a, b, g);
    conj_two_qubit(xb, a, b, g);
    conj_two_qubit(zb, a, b, g);
    PauliString new_xa = image(xa);
    PauliString new_za = image(za);
    PauliString new_xb = image(xb);
    PauliString new_zb = image(zb);
    img_x_[a] = std::move(new_xa);
    img_z_[a] = std::move(new_za);
    img_x_[b] = std::move(new_xb);
    img_z_[b] = std::move(new_zb);
}

}  // namespace moncode
