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

#ifndef MONCODE_DISTILL_H
#define MONCODE_DISTILL_H

#include <map>
#include <string>

#include "moncode/clifford_map.h"
#include "moncode/dual_code.h"
#include "moncode/tableau.h"

namespace moncode {

// Nonnegative dyadic rational num / 2^log2_den, kept with num odd (or the
// canonical zero). Exact arithmetic for branch probabilities and overlaps.
struct Dyadic {
    uint64_t num = 0;
    int64_t log2_den = 0;

    static Dyadic zero() {
        return Dyadic{};
    }
    static Dyadic one() {
        return Dyadic{1, 0};
    }
    // 2^log2_val with log2_val <= 0.
    static Dyadic pow2(int64_t log2_val);

    // Adds 2^log2_val (log2_val <= 0) in place.
    void add_pow2(int64_t log2_val);
    void add(const Dyadic &other);

    bool is_zero() const {
        return num == 0;
    }
    double to_double() const;
    // e.g. "0", "1", "3/2^3".
    std::string str() const;

    bool operator==(const Dyadic &other) const {
        return num == other.num && log2_den == other.log2_den;
    }
    bool operator!=(const Dyadic &other) const {
        return !(*this == other);
    }
};

// Named contiguous qubit spans packed into one flat tableau index space.
class RegisterLayout {
  public:
    // Appends a register and returns its offset.
    size_t add(const std::string &name, size_t width);
    size_t offset(const std::string &name) const;
    size_t width(const std::string &name) const;
    size_t total_width() const {
        return total_;
    }

  private:
    struct Span {
        std::string name;
        size_t offset;
        size_t width;
    };
    const Span &find(const std::string &name) const;

    std::vector<Span> spans_;
    size_t total_ = 0;
};

// Layout used by the pair distillation: optional purifying register R, the
// measured system S, and the ancilla pair registers A_new (EPR partner fed
// into the reversed measurements) and A_bar (kept as the distilled half).
RegisterLayout pair_distillation_layout(size_t n, size_t n_a, bool include_reference);

struct DistillationResult {
    SignVector m;       // forward outcomes, one per schedule slot
    SignVector m_bar;   // reversed-run outcomes, re-indexed by schedule slot
    SignVector s;       // componentwise product m * m_bar
    PauliString feedback;  // applied on A_bar; qubit k = k-th lowest A index
    int64_t ambiguity_log2 = 0;
    Dyadic epr_fidelity;  // exact overlap with perfect pairs on (A, A_bar)
    uint64_t seed = 0;    // filled by callers that manage seeding
};

// Runs the pair distillation once: samples the schedule on S, feeds fresh
// EPR halves through the reversed measurements, decodes s = m * m_bar into a
// feedback Pauli on A_bar, and evaluates the exact EPR fidelity between the
// set-aside A qubits and A_bar.
DistillationResult distill_ab(const MeasurementSchedule &schedule, const SubsystemMask &a,
                              Rng &rng, bool include_reference = false);

// One fully resolved outcome branch of the pair distillation.
struct PairBranch {
    const DistillationResult &result;
    // Post-feedback state (fidelity not yet projected), laid out per
    // pair_distillation_layout(n, n_a, false).
    const StabilizerTableau &state;
    const RegisterLayout &layout;
    int64_t log2_prob;  // branch probability of (m, m_bar)
};

// Walks every (m, m_bar) branch of the pair distillation exactly.
// Requires n <= 4 and tau <= 8.
void enumerate_pair_distillations(const MeasurementSchedule &schedule, const SubsystemMask &a,
                                  const std::function<void(const PairBranch &)> &visit);

// <B_p| rho |B_p> where |B_p> = (p x I) |EPR> over the qubit pairs
// (first[k], second[k]) and p acts on the first slots. Exact.
Dyadic bell_overlap(const StabilizerTableau &state, const std::vector<size_t> &first,
                    const std::vector<size_t> &second, const PauliString &p);

// Exact branch-averaged diagonal of the distilled (A, A_bar) state in the
// Bell basis, keyed by the n_A-qubit Pauli label.
std::map<std::string, Dyadic> distill_ab_average_exact(const MeasurementSchedule &schedule,
                                                       const SubsystemMask &a);

// Sampled estimate of the same diagonal from `runs` independent runs.
std::map<std::string, double> distill_ab_average_sampled(const MeasurementSchedule &schedule,
                                                         const SubsystemMask &a, size_t runs,
                                                         Rng &rng);

// Exact distribution of the sum vector s over all (m, m_bar) branches,
// keyed by SignVector::str().
std::map<std::string, Dyadic> sum_vector_histogram(const MeasurementSchedule &schedule,
                                                   const SubsystemMask &a);

struct ChoiResult {
    SignVector m;      // forward outcomes on the system half
    SignVector m_bar;  // conjugate-replay outcomes on the mirror half
    SignVector s;
    BitVec selector;      // schedule slots whose product forms the feedback
    PauliString feedback;  // pattern applied on the mirror half
    // Post-feedback state on 2n qubits: system 0..n-1, mirror n..2n-1.
    StabilizerTableau state;
};

// Distills the system-reference entanglement: starts from n EPR pairs
// between system and mirror, runs the schedule on the system, replays the
// complex-conjugated schedule on the mirror, and corrects the mirror with
// the Pauli decoded from s.
ChoiResult distill_system_reference(const MeasurementSchedule &schedule, Rng &rng);

// Exact branch-averaged diagonal of the corrected (system, mirror) state in
// the Bell basis, keyed by the n-qubit Pauli label. Requires n <= 3 and
// tau <= 6.
std::map<std::string, Dyadic> system_reference_average_exact(const MeasurementSchedule &schedule);

struct EncodedReferenceResult {
    SignVector m;      // forward outcomes of the monitored schedule
    SignVector m_bar;  // reversed-run outcomes, schedule slots then site rows
    SignVector s;      // sum vector over the full preparation-aware code
    PauliString feedback;  // single-qubit pattern applied on the reference
    bool decode_failed = false;
    int64_t ambiguity_log2 = 0;
    Dyadic epr_fidelity;  // exact overlap with the encoded Bell rows
};

// Measurement schedule whose dual code describes a single reference qubit
// Bell-paired with a logical qubit encoded into n system qubits: two encoded
// Bell rows, the encoded site rows Z_1..Z_{n-1}, then the monitored ops.
// Qubits 0..n-1 are the system, qubit n is the reference.
MeasurementSchedule encoded_reference_schedule(const MeasurementSchedule &schedule,
                                               const CliffordMap &encoding);

// Distills the EPR pair between the reference qubit and the logical qubit
// encoded by `encoding`: runs the schedule forward, reverses it, unwinds the
// encoded site rows, decodes the restricted sum vector into a single-qubit
// feedback on the reference, and scores the encoded Bell rows. A decode
// failure is reported, not thrown: it signals lost reference entanglement.
EncodedReferenceResult distill_encoded_reference(const MeasurementSchedule &schedule,
                                                 const CliffordMap &encoding, Rng &rng);

}  // namespace moncode

#endif
