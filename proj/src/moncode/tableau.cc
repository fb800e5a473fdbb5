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

#include "moncode/tableau.h"

#include <cmath>

#include "moncode/gf2.h"

namespace moncode {

void conj_h(PauliString &p, size_t q) {
    bool xb = p.x.get(q);
    bool zb = p.z.get(q);
    if (xb && zb) {
        p.phase = (p.phase + 2) & 3;
    }
    p.x.set(q, zb);
    p.z.set(q, xb);
}

void conj_s(PauliString &p, size_t q) {
    bool xb = p.x.get(q);
    bool zb = p.z.get(q);
    if (xb && zb) {
        p.phase = (p.phase + 2) & 3;
    }
    p.z.set(q, xb != zb);
}

void conj_cnot(PauliString &p, size_t control, size_t target) {
    bool xc = p.x.get(control);
    bool zc = p.z.get(control);
    bool xt = p.x.get(target);
    bool zt = p.z.get(target);
    if (xc && zt && !(xt != zc)) {
        p.phase = (p.phase + 2) & 3;
    }
    p.x.set(target, xt != xc);
    p.z.set(control, zc != zt);
}

void conj_cz(PauliString &p, size_t a, size_t b) {
    bool xa = p.x.get(a);
    bool za = p.z.get(a);
    bool xb = p.x.get(b);
    bool zb = p.z.get(b);
    if (xa && xb && (za != zb)) {
        p.phase = (p.phase + 2) & 3;
    }
    p.z.set(a, za != xb);
    p.z.set(b, zb != xa);
}

void conj_swap(PauliString &p, size_t a, size_t b) {
    bool xa = p.x.get(a);
    bool za = p.z.get(a);
    p.x.set(a, p.x.get(b));
    p.z.set(a, p.z.get(b));
    p.x.set(b, xa);
    p.z.set(b, za);
}

TwoQubitClifford TwoQubitClifford::identity() {
    return TwoQubitClifford{PauliString::from_str("XI"), PauliString::from_str("ZI"),
                            PauliString::from_str("IX"), PauliString::from_str("IZ")};
}

namespace {

PauliString two_qubit_pattern(uint32_t pat) {
    PauliString p(2);
    p.x.set(0, pat & 1);
    p.x.set(1, (pat >> 1) & 1);
    p.z.set(0, (pat >> 2) & 1);
    p.z.set(1, (pat >> 3) & 1);
    return p;
}

PauliString pick_pattern(const std::vector<PauliString> &pool, Rng &rng) {
    PauliString p = pool[rng.next_below(pool.size())];
    p.phase = rng.next_bit() ? 2 : 0;
    return p;
}

}  // namespace

TwoQubitClifford TwoQubitClifford::random(Rng &rng) {
    PauliString xa = two_qubit_pattern(1 + static_cast<uint32_t>(rng.next_below(15)));
    xa.phase = rng.next_bit() ? 2 : 0;

    std::vector<PauliString> anti;
    for (uint32_t pat = 1; pat < 16; pat++) {
        PauliString p = two_qubit_pattern(pat);
        if (!p.commutes(xa)) {
            anti.push_back(p);
        }
    }
    PauliString za = pick_pattern(anti, rng);

    std::vector<PauliString> commutant;
    for (uint32_t pat = 1; pat < 16; pat++) {
        PauliString p = two_qubit_pattern(pat);
        if (p.commutes(xa) && p.commutes(za)) {
            commutant.push_back(p);
        }
    }
    PauliString xb = pick_pattern(commutant, rng);
    std::vector<PauliString> second;
    for (const PauliString &p : commutant) {
        if (!p.commutes(xb)) {
            second.push_back(p);
        }
    }
    PauliString zb = pick_pattern(second, rng);
    return TwoQubitClifford{xa, za, xb, zb};
}

void conj_two_qubit(PauliString &p, size_t a, size_t b, const TwoQubitClifford &g) {
    bool xa = p.x.get(a);
    bool za = p.z.get(a);
    bool xb = p.x.get(b);
    bool zb = p.z.get(b);
    if (!(xa || za || xb || zb)) {
        return;
    }
    PauliString q = PauliString::identity(2);
    if (xa) {
        q = q * g.img_xa;
    }
    if (za) {
        q = q * g.img_za;
    }
    if (xb) {
        q = q * g.img_xb;
    }
    if (zb) {
        q = q * g.img_zb;
    }
    PauliString embedded(p.num_qubits);
    embedded.phase = q.phase;
    embedded.x.set(a, q.x.get(0));
    embedded.x.set(b, q.x.get(1));
    embedded.z.set(a, q.z.get(0));
    embedded.z.set(b, q.z.get(1));

    PauliString rest = p;
    rest.x.set(a, false);
    rest.x.set(b, false);
    rest.z.set(a, false);
    rest.z.set(b, false);

    p = embedded * rest;
    // The canonical factors at a and b contribute i^{xa za} and i^{xb zb}.
    p.phase = (p.phase + (xa && za ? 1 : 0) + (xb && zb ? 1 : 0)) & 3;
}

StabilizerTableau StabilizerTableau::maximally_mixed(size_t num_qubits) {
    return StabilizerTableau(num_qubits);
}

StabilizerTableau StabilizerTableau::with_reference(size_t n) {
    StabilizerTableau t(2 * n);
    for (size_t q = 0; q < n; q++) {
        PauliString xx(2 * n);
        xx.x.set(q, true);
        xx.x.set(n + q, true);
        PauliString zz(2 * n);
        zz.z.set(q, true);
        zz.z.set(n + q, true);
        t.gens_.push_back(xx);
        t.gens_.push_back(zz);
    }
    return t;
}

StabilizerTableau StabilizerTableau::epr_pairs(size_t k) {
    return with_reference(k);
}

StabilizerTableau StabilizerTableau::computational_zero(size_t num_qubits) {
    StabilizerTableau t(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        t.gens_.push_back(PauliString::single(num_qubits, q, 'Z'));
    }
    return t;
}

MeasureResult StabilizerTableau::measure_impl(const PauliString &p, Rng *rng,
                                              std::optional<int> forced) {
    if (p.num_qubits != n_) {
        throw std::invalid_argument("Qubit count mismatch in measure().");
    }
    if (!p.is_hermitian()) {
        throw std::invalid_argument("Measured operator must be Hermitian.");
    }
    if (p.is_identity()) {
        throw std::invalid_argument("Measured operator must not be the identity.");
    }

    std::vector<size_t> anti;
    for (size_t i = 0; i < gens_.size(); i++) {
        if (!gens_[i].commutes(p)) {
            anti.push_back(i);
        }
    }
    if (!anti.empty()) {
        size_t pivot = anti[0];
        for (size_t k = 1; k < anti.size(); k++) {
            gens_[anti[k]] = gens_[anti[k]] * gens_[pivot];
        }
        int outcome = forced ? *forced : (rng->next_bit() ? -1 : +1);
        PauliString stab = p;
        if (outcome < 0) {
            stab.phase = (stab.phase + 2) & 3;
        }
        gens_[pivot] = stab;
        log2_prob_ -= 1;
        return {outcome, true};
    }

    std::vector<BitVec> rows;
    rows.reserve(gens_.size());
    for (const PauliString &g : gens_) {
        rows.push_back(g.symplectic_bits());
    }
    std::optional<BitVec> combo = gf2_solve(rows, p.symplectic_bits());
    if (combo) {
        PauliString prod = PauliString::identity(n_);
        for (size_t i = 0; i < gens_.size(); i++) {
            if (combo->get(i)) {
                prod = prod * gens_[i];
            }
        }
        int outcome = prod.sign() * p.sign();
        if (forced && *forced != outcome) {
            throw ImpossibleOutcome();
        }
        return {outcome, false};
    }

    int outcome = forced ? *forced : (rng->next_bit() ? -1 : +1);
    PauliString stab = p;
    if (outcome < 0) {
        stab.phase = (stab.phase + 2) & 3;
    }
    gens_.push_back(stab);
    log2_prob_ -= 1;
    return {outcome, true};
}

MeasureResult StabilizerTableau::measure(const PauliString &p, Rng &rng) {
    return measure_impl(p, &rng, std::nullopt);
}

MeasureResult StabilizerTableau::measure_forced(const PauliString &p, int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw std::invalid_argument("Forced outcome must be +1 or -1.");
    }
    return measure_impl(p, nullptr, outcome);
}

std::optional<MeasureResult> StabilizerTableau::try_measure_forced(const PauliString &p,
                                                                   int outcome) {
    try {
        return measure_forced(p, outcome);
    } catch (const ImpossibleOutcome &) {
        return std::nullopt;
    }
}

int StabilizerTableau::expectation(const PauliString &p) const {
    if (p.num_qubits != n_) {
        throw std::invalid_argument("Qubit count mismatch in expectation().");
    }
    if (!p.is_hermitian()) {
        throw std::invalid_argument("expectation() requires a Hermitian operator.");
    }
    for (const PauliString &g : gens_) {
        if (!g.commutes(p)) {
            return 0;
        }
    }
    std::vector<BitVec> rows;
    rows.reserve(gens_.size());
    for (const PauliString &g : gens_) {
        rows.push_back(g.symplectic_bits());
    }
    std::optional<BitVec> combo = gf2_solve(rows, p.symplectic_bits());
    if (!combo) {
        return 0;
    }
    PauliString prod = PauliString::identity(n_);
    for (size_t i = 0; i < gens_.size(); i++) {
        if (combo->get(i)) {
            prod = prod * gens_[i];
        }
    }
    return prod.sign() * p.sign();
}

int64_t StabilizerTableau::subsystem_entropy(const SubsystemMask &mask) const {
    if (mask.num_qubits != n_) {
        throw std::invalid_argument("Qubit count mismatch in subsystem_entropy().");
    }
    SubsystemMask comp = mask.complement();
    std::vector<BitVec> rows;
    rows.reserve(gens_.size());
    for (const PauliString &g : gens_) {
        BitVec row(2 * n_);
        for (size_t q : comp.indices()) {
            row.set(q, g.x.get(q));
            row.set(n_ + q, g.z.get(q));
        }
        rows.push_back(std::move(row));
    }
    int64_t rank_outside = static_cast<int64_t>(gf2_rank(std::move(rows)));
    int64_t inside = static_cast<int64_t>(gens_.size()) - rank_outside;
    return static_cast<int64_t>(mask.size()) - inside;
}

double StabilizerTableau::purity(const SubsystemMask &mask) const {
    return std::ldexp(1.0, static_cast<int>(-subsystem_entropy(mask)));
}

void StabilizerTableau::apply_h(size_t q) {
    for (PauliString &g : gens_) {
        conj_h(g, q);
    }
}

void StabilizerTableau::apply_s(size_t q) {
    for (PauliString &g : gens_) {
        conj_s(g, q);
    }
}

void StabilizerTableau::apply_cnot(size_t control, size_t target) {
    for (PauliString &g : gens_) {
        conj_cnot(g, control, target);
    }
}

void StabilizerTableau::apply_cz(size_t a, size_t b) {
    for (PauliString &g : gens_) {
        conj_cz(g, a, b);
    }
}

void StabilizerTableau::apply_swap(size_t a, size_t b) {
    for (PauliString &g : gens_) {
        conj_swap(g, a, b);
    }
}

void StabilizerTableau::apply_pauli(const PauliString &p) {
    if (p.num_qubits != n_) {
        throw std::invalid_argument("Qubit count mismatch in apply_pauli().");
    }
    for (PauliString &g : gens_) {
        if (!g.commutes(p)) {
            g.phase = (g.phase + 2) & 3;
        }
    }
}

void StabilizerTableau::apply_two_qubit(size_t a, size_t b, const TwoQubitClifford &g) {
    if (a == b || a >= n_ || b >= n_) {
        throw std::invalid_argument("Bad qubit pair in apply_two_qubit().");
    }
    for (PauliString &gen : gens_) {
        conj_two_qubit(gen, a, b, g);
    }
}

void StabilizerTableau::apply_random_two_qubit_clifford(size_t a, size_t b, Rng &rng) {
    apply_two_qubit(a, b, TwoQubitClifford::random(rng));
}

SignVector StabilizerTableau::run_schedule(const MeasurementSchedule &schedule, Rng &rng,
                                           size_t offset) {
    SignVector outcomes(schedule.ops.size());
    for (size_t j = 0; j < schedule.ops.size(); j++) {
        MeasureResult r = measure(schedule.ops[j].embedded(n_, offset), rng);
        outcomes.set_sign(j, r.outcome);
    }
    return outcomes;
}

void StabilizerTableau::run_schedule_forced(const MeasurementSchedule &schedule,
                                            const SignVector &outcomes, size_t offset) {
    if (outcomes.len != schedule.ops.size()) {
        throw std::invalid_argument("Outcome count does not match schedule length.");
    }
    for (size_t j = 0; j < schedule.ops.size(); j++) {
        measure_forced(schedule.ops[j].embedded(n_, offset), outcomes.sign_at(j));
    }
}

namespace {

void enumerate_rec(
    const StabilizerTableau &state, const std::vector<PauliString> &ops, size_t step,
    SignVector &outcomes, int64_t base_log2_prob,
    const std::function<void(const StabilizerTableau &, const SignVector &, int64_t)> &visit) {
    if (step == ops.size()) {
        visit(state, outcomes, state.log2_prob() - base_log2_prob);
        return;
    }
    int det = state.expectation(ops[step]);
    if (det != 0) {
        StabilizerTableau next = state;
        next.measure_forced(ops[step], det);
        outcomes.set_sign(step, det);
        enumerate_rec(next, ops, step + 1, outcomes, base_log2_prob, visit);
        return;
    }
    for (int o : {+1, -1}) {
        StabilizerTableau next = state;
        next.measure_forced(ops[step], o);
        outcomes.set_sign(step, o);
        enumerate_rec(next, ops, step + 1, outcomes, base_log2_prob, visit);
    }
}

}  // namespace

void enumerate_schedule_runs(
    const StabilizerTableau &start, const std::vector<PauliString> &ops,
    const std::function<void(const StabilizerTableau &, const SignVector &, int64_t)> &visit) {
    SignVector outcomes(ops.size());
    enumerate_rec(start, ops, 0, outcomes, start.log2_prob(), visit);
}

}  // namespace moncode
