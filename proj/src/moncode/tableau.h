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

#ifndef MONCODE_TABLEAU_H
#define MONCODE_TABLEAU_H

#include <functional>
#include <optional>

#include "moncode/rng.h"
#include "moncode/schedule.h"
#include "moncode/sign_vector.h"

namespace moncode {

// In-place Heisenberg conjugation of a signed Pauli by named gates.
void conj_h(PauliString &p, size_t q);
void conj_s(PauliString &p, size_t q);
void conj_cnot(PauliString &p, size_t control, size_t target);
void conj_cz(PauliString &p, size_t a, size_t b);
void conj_swap(PauliString &p, size_t a, size_t b);

// Two-qubit Clifford described by the images of X_a, Z_a, X_b, Z_b, each a
// signed Hermitian 2-qubit Pauli (qubit 0 = a, qubit 1 = b).
struct TwoQubitClifford {
    PauliString img_xa, img_za, img_xb, img_zb;

    static TwoQubitClifford identity();
    // Uniform over the 11520 two-qubit Cliffords (modulo global phase).
    static TwoQubitClifford random(Rng &rng);
};

// Conjugates p by the two-qubit Clifford acting at qubit positions (a, b).
void conj_two_qubit(PauliString &p, size_t a, size_t b, const TwoQubitClifford &g);

struct MeasureResult {
    int outcome;      // +1 or -1
    bool was_random;  // false when the outcome was determined by the state
};

struct ImpossibleOutcome : std::runtime_error {
    ImpossibleOutcome() : std::runtime_error("Forced measurement outcome has probability 0.") {
    }
};

// Stabilizer state tracked as an independent list of commuting signed
// generators. Mixed states are first class: fewer generators than qubits
// just means the remaining directions are maximally mixed, so there is no
// destabilizer bookkeeping.
class StabilizerTableau {
  public:
    static StabilizerTableau maximally_mixed(size_t num_qubits);
    // 2n qubits, system 0..n-1 purified by reference n..2n-1 via EPR pairs
    // q <-> n+q with +XX, +ZZ stabilizers.
    static StabilizerTableau with_reference(size_t n);
    // 2k qubits holding k EPR pairs q <-> k+q.
    static StabilizerTableau epr_pairs(size_t k);
    static StabilizerTableau computational_zero(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }
    size_t num_generators() const {
        return gens_.size();
    }
    const std::vector<PauliString> &generators() const {
        return gens_;
    }
    // log2 of the probability of all sampled/forced outcomes so far.
    int64_t log2_prob() const {
        return log2_prob_;
    }

    // Projective measurement of a signed Hermitian Pauli. Random outcomes are
    // drawn from rng; forced != nullopt demands that outcome and throws
    // ImpossibleOutcome when its probability is zero.
    MeasureResult measure(const PauliString &p, Rng &rng);
    MeasureResult measure_forced(const PauliString &p, int outcome);
    // Forced measurement that reports failure instead of throwing.
    std::optional<MeasureResult> try_measure_forced(const PauliString &p, int outcome);

    // +1 / -1 when p (up to sign) is in the stabilizer group, else 0.
    int expectation(const PauliString &p) const;

    // Von Neumann entropy of the mask in bits (integer for stabilizer
    // states): |mask| - log2 |S restricted to stabilizers supported on mask|.
    int64_t subsystem_entropy(const SubsystemMask &mask) const;
    double purity(const SubsystemMask &mask) const;

    void apply_h(size_t q);
    void apply_s(size_t q);
    void apply_cnot(size_t control, size_t target);
    void apply_cz(size_t a, size_t b);
    void apply_swap(size_t a, size_t b);
    // Conjugation by a Pauli: flips the sign of anticommuting generators.
    void apply_pauli(const PauliString &p);
    void apply_two_qubit(size_t a, size_t b, const TwoQubitClifford &g);
    void apply_random_two_qubit_clifford(size_t a, size_t b, Rng &rng);

    // Measures each schedule operator in order (embedded at qubit offset) and
    // returns the outcomes.
    SignVector run_schedule(const MeasurementSchedule &schedule, Rng &rng, size_t offset = 0);
    // Same, but with all outcomes forced; throws ImpossibleOutcome.
    void run_schedule_forced(const MeasurementSchedule &schedule, const SignVector &outcomes,
                             size_t offset = 0);

  private:
    explicit StabilizerTableau(size_t n) : n_(n) {
    }
    MeasureResult measure_impl(const PauliString &p, Rng *rng, std::optional<int> forced);

    size_t n_;
    std::vector<PauliString> gens_;
    int64_t log2_prob_ = 0;
};

// Walks every outcome branch of measuring ops in order, calling
// visit(state, outcomes, log2_prob) at each leaf. Zero-probability branches
// are never visited; log2_prob is relative to the starting state.
void enumerate_schedule_runs(
    const StabilizerTableau &start, const std::vector<PauliString> &ops,
    const std::function<void(const StabilizerTableau &, const SignVector &, int64_t)> &visit);

}  // namespace moncode

#endif
