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

#include "moncode/groups.h"

#include <stdexcept>

#include "moncode/gf2.h"
#include "moncode/tableau.h"

namespace moncode {

static PauliString strip_phase(PauliString p) {
    p.phase = 0;
    return p;
}

PauliGroupGens PauliGroupGens::full(size_t num_qubits) {
    PauliGroupGens g(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        g.gens_.push_back(PauliString::single(num_qubits, q, 'X'));
        g.gens_.push_back(PauliString::single(num_qubits, q, 'Z'));
    }
    return g;
}

bool PauliGroupGens::contains(const PauliString &p) const {
    if (p.num_qubits != n_) {
        throw std::invalid_argument("Operator qubit count mismatch.");
    }
    std::vector<BitVec> rows;
    rows.reserve(gens_.size());
    for (const PauliString &g : gens_) {
        rows.push_back(g.symplectic_bits());
    }
    return gf2_solve(rows, p.symplectic_bits()).has_value();
}

bool PauliGroupGens::contains_all(const PauliGroupGens &other) const {
    for (const PauliString &g : other.gens_) {
        if (!contains(g)) {
            return false;
        }
    }
    return true;
}

bool PauliGroupGens::same_group(const PauliGroupGens &other) const {
    return rank() == other.rank() && contains_all(other);
}

bool PauliGroupGens::insert_if_independent(const PauliString &p) {
    if (p.is_identity() || contains(p)) {
        return false;
    }
    gens_.push_back(strip_phase(p));
    return true;
}

void PauliGroupGens::measure_update(const PauliString &p) {
    if (p.num_qubits != n_) {
        throw std::invalid_argument("Operator qubit count mismatch.");
    }
    size_t pivot = SIZE_MAX;
    for (size_t k = 0; k < gens_.size(); k++) {
        if (!gens_[k].commutes(p)) {
            pivot = k;
            break;
        }
    }
    if (pivot != SIZE_MAX) {
        for (size_t k = pivot + 1; k < gens_.size(); k++) {
            if (!gens_[k].commutes(p)) {
                gens_[k] = strip_phase(gens_[k] * gens_[pivot]);
            }
        }
        gens_.erase(gens_.begin() + pivot);
    }
    insert_if_independent(p);
}

PauliGroupGens PauliGroupGens::commutant() const {
    // Swapping the x and z halves turns the anticommutation pairing into a
    // plain dot product, so the commutant is a nullspace.
    std::vector<BitVec> rows;
    rows.reserve(gens_.size());
    for (const PauliString &g : gens_) {
        BitVec row(2 * n_);
        for (size_t q = 0; q < n_; q++) {
            row.set(q, g.z.get(q));
            row.set(n_ + q, g.x.get(q));
        }
        rows.push_back(std::move(row));
    }
    PauliGroupGens result(n_);
    for (const BitVec &v : gf2_nullspace(rows, 2 * n_)) {
        PauliString p(n_);
        for (size_t q = 0; q < n_; q++) {
            p.x.set(q, v.get(q));
            p.z.set(q, v.get(n_ + q));
        }
        result.gens_.push_back(std::move(p));
    }
    return result;
}

std::vector<PauliString> PauliGroupGens::elements() const {
    std::vector<PauliString> out;
    out.push_back(PauliString::identity(n_));
    for (const PauliString &g : gens_) {
        size_t count = out.size();
        for (size_t k = 0; k < count; k++) {
            out.push_back(strip_phase(out[k] * g));
        }
    }
    return out;
}

static std::vector<PauliGroupGens> run_steps(const MeasurementSchedule &schedule,
                                             PauliGroupGens start) {
    std::vector<PauliGroupGens> steps;
    steps.push_back(start);
    for (const PauliString &op : schedule.ops) {
        start.measure_update(op);
        steps.push_back(start);
    }
    return steps;
}

std::vector<PauliGroupGens> stabilizer_steps(const MeasurementSchedule &schedule) {
    return run_steps(schedule, PauliGroupGens(schedule.num_qubits));
}

std::vector<PauliGroupGens> logical_steps(const MeasurementSchedule &schedule) {
    return run_steps(schedule, PauliGroupGens::full(schedule.num_qubits));
}

PauliGroupGens stabilizer_group(const MeasurementSchedule &schedule) {
    return stabilizer_steps(schedule).back();
}

PauliGroupGens logical_group(const MeasurementSchedule &schedule) {
    return logical_steps(schedule).back();
}

int64_t logical_qubit_count(const PauliGroupGens &logical, const PauliGroupGens &stabilizer) {
    return (static_cast<int64_t>(logical.rank()) - static_cast<int64_t>(stabilizer.rank())) / 2;
}

std::vector<std::pair<PauliString, PauliString>> logical_pairs(
    const PauliGroupGens &logical, const PauliGroupGens &stabilizer) {
    std::vector<PauliString> pool = logical.generators();
    std::vector<std::pair<PauliString, PauliString>> pairs;
    while (!pool.empty()) {
        PauliString u = pool.front();
        pool.erase(pool.begin());
        size_t partner = SIZE_MAX;
        for (size_t k = 0; k < pool.size(); k++) {
            if (!pool[k].commutes(u)) {
                partner = k;
                break;
            }
        }
        if (partner == SIZE_MAX) {
            // u commutes with every remaining generator, so it sits in the
            // stabilizer directions.
            continue;
        }
        PauliString v = pool[partner];
        pool.erase(pool.begin() + partner);
        for (PauliString &w : pool) {
            if (!w.commutes(u)) {
                w = w * v;
            }
            if (!w.commutes(v)) {
                w = w * u;
            }
            w.phase = 0;
        }
        pairs.emplace_back(u, v);
    }
    if (static_cast<int64_t>(pairs.size()) != logical_qubit_count(logical, stabilizer)) {
        throw std::logic_error("Pairing count disagrees with the group ranks.");
    }
    return pairs;
}

int signed_eigenvalue(const MeasurementSchedule &schedule, const SignVector &outcomes,
                      const PauliString &p) {
    StabilizerTableau state = StabilizerTableau::maximally_mixed(schedule.num_qubits);
    state.run_schedule_forced(schedule, outcomes);
    int value = state.expectation(p);
    if (value == 0) {
        throw std::invalid_argument("Operator eigenvalue is not determined by the outcomes.");
    }
    return value;
}

}  // namespace moncode
