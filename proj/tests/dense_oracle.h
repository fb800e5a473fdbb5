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

#ifndef MONCODE_TESTS_DENSE_ORACLE_H
#define MONCODE_TESTS_DENSE_ORACLE_H

#include <complex>
#include <vector>

#include "moncode/pauli_string.h"
#include "moncode/subsystem_mask.h"

// Brute-force 2^n complex matrix reference implementation. Deliberately
// written with none of the packed bit tricks from the library so it can act
// as an independent oracle in tests.
namespace moncode::oracle {

using Cplx = std::complex<double>;
using CMat = std::vector<std::vector<Cplx>>;

CMat identity_mat(size_t dim);
CMat kron(const CMat &a, const CMat &b);
CMat mat_mul(const CMat &a, const CMat &b);
CMat mat_add(const CMat &a, const CMat &b);
CMat mat_scale(const Cplx &c, const CMat &a);
CMat dagger(const CMat &a);
Cplx trace(const CMat &a);
bool approx_equal(const CMat &a, const CMat &b, double eps = 1e-9);

// Full 2^n matrix of a signed pauli string.
CMat pauli_matrix(const moncode::PauliString &p);

// Mixed-state simulator driven entirely by dense matrices.
struct DenseState {
    size_t num_qubits;
    CMat rho;

    static DenseState maximally_mixed(size_t n);
    static DenseState computational_zero(size_t n);
    // EPR pairs q <-> n+q on 2n qubits.
    static DenseState with_reference(size_t n);

    void apply_unitary(const CMat &u);
    // Probability of outcome +1 when measuring p.
    double prob_plus(const moncode::PauliString &p) const;
    // Collapses onto the given outcome (+1/-1); returns the outcome
    // probability (0 means the collapse was impossible and rho is garbage).
    double measure(const moncode::PauliString &p, int outcome);
    double expectation(const moncode::PauliString &p) const;
    CMat reduced_density(const moncode::SubsystemMask &mask) const;
    // Renyi-2 entropy of the mask, in bits. Agrees with the von Neumann
    // entropy on stabilizer states (flat spectra).
    double renyi2_entropy(const moncode::SubsystemMask &mask) const;
};

}  // namespace moncode::oracle

#endif
