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

#include "dense_oracle.h"

#include <cmath>
#include <stdexcept>

namespace moncode::oracle {

CMat identity_mat(size_t dim) {
    CMat m(dim, std::vector<Cplx>(dim, 0.0));
    for (size_t i = 0; i < dim; i++) {
        m[i][i] = 1.0;
    }
    return m;
}

CMat kron(const CMat &a, const CMat &b) {
    size_t ra = a.size(), ca = a[0].size();
    size_t rb = b.size(), cb = b[0].size();
    CMat m(ra * rb, std::vector<Cplx>(ca * cb, 0.0));
    for (size_t i = 0; i < ra; i++) {
        for (size_t j = 0; j < ca; j++) {
            for (size_t k = 0; k < rb; k++) {
                for (size_t l = 0; l < cb; l++) {
                    m[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return m;
}

CMat mat_mul(const CMat &a, const CMat &b) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    CMat out(n, std::vector<Cplx>(m, 0.0));
    for (size_t i = 0; i < n; i++) {
        for (size_t p = 0; p < k; p++) {
            Cplx aip = a[i][p];
            if (aip == Cplx(0.0)) {
                continue;
            }
            for (size_t j = 0; j < m; j++) {
                out[i][j] += aip * b[p][j];
            }
        }
    }
    return out;
}

CMat mat_add(const CMat &a, const CMat &b) {
    CMat out = a;
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < a[0].size(); j++) {
            out[i][j] += b[i][j];
        }
    }
    return out;
}

CMat mat_scale(const Cplx &c, const CMat &a) {
    CMat out = a;
    for (auto &row : out) {
        for (auto &v : row) {
            v *= c;
        }
    }
    return out;
}

CMat dagger(const CMat &a) {
    size_t n = a.size(), m = a[0].size();
    CMat out(m, std::vector<Cplx>(n, 0.0));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < m; j++) {
            out[j][i] = std::conj(a[i][j]);
        }
    }
    return out;
}

Cplx trace(const CMat &a) {
    Cplx t = 0.0;
    for (size_t i = 0; i < a.size(); i++) {
        t += a[i][i];
    }
    return t;
}

bool approx_equal(const CMat &a, const CMat &b, double eps) {
    if (a.size() != b.size() || a[0].size() != b[0].size()) {
        return false;
    }
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < a[0].size(); j++) {
            if (std::abs(a[i][j] - b[i][j]) > eps) {
                return false;
            }
        }
    }
    return true;
}

CMat pauli_matrix(const moncode::PauliString &p) {
    const Cplx I(0.0, 1.0);
    CMat x = {{0, 1}, {1, 0}};
    CMat y = {{0, -I}, {I, 0}};
    CMat z = {{1, 0}, {0, -1}};
    CMat one = identity_mat(2);
    CMat m = identity_mat(1);
    for (size_t q = 0; q < p.num_qubits; q++) {
        switch (p.pauli_char_at(q)) {
            case 'I':
                m = kron(m, one);
                break;
            case 'X':
                m = kron(m, x);
                break;
            case 'Y':
                m = kron(m, y);
                break;
            case 'Z':
                m = kron(m, z);
                break;
        }
    }
    Cplx factor = 1.0;
    for (uint8_t k = 0; k < p.phase; k++) {
        factor *= I;
    }
    return mat_scale(factor, m);
}

DenseState DenseState::maximally_mixed(size_t n) {
    size_t dim = size_t{1} << n;
    DenseState s{n, identity_mat(dim)};
    s.rho = mat_scale(1.0 / double(dim), s.rho);
    return s;
}

DenseState DenseState::computational_zero(size_t n) {
    size_t dim = size_t{1} << n;
    DenseState s{n, CMat(dim, std::vector<Cplx>(dim, 0.0))};
    s.rho[0][0] = 1.0;
    return s;
}

DenseState DenseState::with_reference(size_t n) {
    // |Phi> = 2^{-n/2} sum_b |b>_S |b>_R with S = qubits 0..n-1, R = n..2n-1.
    size_t dim_half = size_t{1} << n;
    size_t dim = dim_half * dim_half;
    std::vector<Cplx> psi(dim, 0.0);
    for (size_t b = 0; b < dim_half; b++) {
        // Qubit q of the system is bit (n-1-q) in row-major kron ordering.
        psi[b * dim_half + b] = 1.0 / std::sqrt(double(dim_half));
    }
    DenseState s{2 * n, CMat(dim, std::vector<Cplx>(dim, 0.0))};
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            s.rho[i][j] = psi[i] * std::conj(psi[j]);
        }
    }
    return s;
}

void DenseState::apply_unitary(const CMat &u) {
    rho = mat_mul(u, mat_mul(rho, dagger(u)));
}

double DenseState::prob_plus(const moncode::PauliString &p) const {
    CMat proj = mat_scale(0.5, mat_add(identity_mat(rho.size()), pauli_matrix(p)));
    return std::real(trace(mat_mul(proj, rho)));
}

double DenseState::measure(const moncode::PauliString &p, int outcome) {
    CMat pm = pauli_matrix(p);
    if (outcome == -1) {
        pm = mat_scale(-1.0, pm);
    }
    CMat proj = mat_scale(0.5, mat_add(identity_mat(rho.size()), pm));
    CMat collapsed = mat_mul(proj, mat_mul(rho, proj));
    double prob = std::real(trace(collapsed));
    if (prob < 1e-12) {
        return 0.0;
    }
    rho = mat_scale(1.0 / prob, collapsed);
    return prob;
}

double DenseState::expectation(const moncode::PauliString &p) const {
    return std::real(trace(mat_mul(pauli_matrix(p), rho)));
}

CMat DenseState::reduced_density(const moncode::SubsystemMask &mask) const {
    auto kept = mask.indices();
    size_t nk = kept.size();
    size_t dim_kept = size_t{1} << nk;
    auto dropped = mask.complement().indices();
    size_t nd = dropped.size();
    size_t dim_dropped = size_t{1} << nd;

    // Qubit q occupies bit (num_qubits-1-q) of the row index.
    auto assemble = [&](size_t kept_bits, size_t dropped_bits) {
        size_t idx = 0;
        for (size_t a = 0; a < nk; a++) {
            if ((kept_bits >> a) & 1) {
                idx |= size_t{1} << (num_qubits - 1 - kept[a]);
            }
        }
        for (size_t a = 0; a < nd; a++) {
            if ((dropped_bits >> a) & 1) {
                idx |= size_t{1} << (num_qubits - 1 - dropped[a]);
            }
        }
        return idx;
    };

    CMat out(dim_kept, std::vector<Cplx>(dim_kept, 0.0));
    for (size_t i = 0; i < dim_kept; i++) {
        for (size_t j = 0; j < dim_kept; j++) {
            for (size_t d = 0; d < dim_dropped; d++) {
                out[i][j] += rho[assemble(i, d)][assemble(j, d)];
            }
        }
    }
    return out;
}

double DenseState::renyi2_entropy(const moncode::SubsystemMask &mask) const {
    CMat ra = reduced_density(mask);
    double purity = std::real(trace(mat_mul(ra, ra)));
    return -std::log2(purity);
}

}  // namespace moncode::oracle
