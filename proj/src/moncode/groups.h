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

#ifndef MONCODE_GROUPS_H
#define MONCODE_GROUPS_H

#include <utility>

#include "moncode/schedule.h"
#include "moncode/sign_vector.h"

namespace moncode {

// Subgroup of the sign-free Pauli group held as an independent generator
// list. Generators always carry phase 0; membership ignores signs.
class PauliGroupGens {
public:
    explicit PauliGroupGens(size_t num_qubits) : n_(num_qubits) {
    }
    // Generated by every X_q and Z_q.
    static PauliGroupGens full(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }
    // log2 of the element count.
    size_t rank() const {
        return gens_.size();
    }
    const std::vector<PauliString> &generators() const {
        return gens_;
    }

    bool contains(const PauliString &p) const;
    bool contains_all(const PauliGroupGens &other) const;
    bool same_group(const PauliGroupGens &other) const;

    // Returns true when p was outside the span and got appended.
    bool insert_if_independent(const PauliString &p);

    // Measurement of p: the lowest generator anticommuting with p is folded
    // into the other anticommuting generators and dropped, then p is absorbed
    // if independent.
    void measure_update(const PauliString &p);

    // Elements commuting with every generator.
    PauliGroupGens commutant() const;

    // All 2^rank pattern elements; intended for small groups.
    std::vector<PauliString> elements() const;

private:
    size_t n_;
    std::vector<PauliString> gens_;
};

// Snapshots after 0..tau measurements; entry t is the group for the first t
// operators.
std::vector<PauliGroupGens> stabilizer_steps(const MeasurementSchedule &schedule);
std::vector<PauliGroupGens> logical_steps(const MeasurementSchedule &schedule);
PauliGroupGens stabilizer_group(const MeasurementSchedule &schedule);
PauliGroupGens logical_group(const MeasurementSchedule &schedule);

// (rank(logical) - rank(stabilizer)) / 2.
int64_t logical_qubit_count(const PauliGroupGens &logical, const PauliGroupGens &stabilizer);

// Anticommuting generator pairs spanning the logical group over the
// stabilizer: pairs[i].first anticommutes with pairs[i].second and commutes
// with everything else returned and with the stabilizer.
std::vector<std::pair<PauliString, PauliString>> logical_pairs(const PauliGroupGens &logical,
                                                               const PauliGroupGens &stabilizer);

// Eigenvalue of p on the schedule output with the given outcomes, running on
// the maximally mixed state. Throws std::invalid_argument when p is not
// determined by the outcomes.
int signed_eigenvalue(const MeasurementSchedule &schedule, const SignVector &outcomes,
                      const PauliString &p);

}  // namespace moncode

#endif
