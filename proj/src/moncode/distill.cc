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

#include "moncode/distill.h"

#include <cmath>
#include <stdexcept>

namespace moncode {

Dyadic Dyadic::pow2(int64_t log2_val) {
    Dyadic d;
    d.add_pow2(log2_val);
    return d;
}

namespace {

void normalize(Dyadic &d) {
    if (d.num == 0) {
        d.log2_den = 0;
        return;
    }
    while ((d.num & 1) == 0 && d.log2_den > 0) {
        d.num >>= 1;
        d.log2_den--;
    }
}

uint64_t shifted_up(uint64_t value, int64_t shift) {
    if (shift == 0) {
        return value;
    }
    if (shift >= 64 || (value >> (64 - shift)) != 0) {
        throw std::overflow_error("Dyadic numerator exceeds 64 bits.");
    }
    return value << shift;
}

}  // namespace

void Dyadic::add_pow2(int64_t log2_val) {
    if (log2_val > 0) {
        throw std::invalid_argument("add_pow2 expects log2_val <= 0.");
    }
    int64_t k = -log2_val;
    if (num == 0) {
        num = 1;
        log2_den = k;
        return;
    }
    if (k > log2_den) {
        num = shifted_up(num, k - log2_den);
        log2_den = k;
    }
    uint64_t term = shifted_up(1, log2_den - k);
    if (num + term < num) {
        throw std::overflow_error("Dyadic numerator exceeds 64 bits.");
    }
    num += term;
    normalize(*this);
}

void Dyadic::add(const Dyadic &other) {
    if (other.num == 0) {
        return;
    }
    int64_t den = std::max(log2_den, other.log2_den);
    uint64_t a = shifted_up(num, den - log2_den);
    uint64_t b = shifted_up(other.num, den - other.log2_den);
    if (a + b < a) {
        throw std::overflow_error("Dyadic numerator exceeds 64 bits.");
    }
    num = a + b;
    log2_den = den;
    normalize(*this);
}

double Dyadic::to_double() const {
    return std::ldexp(static_cast<double>(num), static_cast<int>(-log2_den));
}

std::string Dyadic::str() const {
    if (log2_den == 0) {
        return std::to_string(num);
    }
    return std::to_string(num) + "/2^" + std::to_string(log2_den);
}

size_t RegisterLayout::add(const std::string &name, size_t width) {
    for (const Span &span : spans_) {
        if (span.name == name) {
            throw std::invalid_argument("Duplicate register name: " + name);
        }
    }
    size_t offset = total_;
    spans_.push_back(Span{name, offset, width});
    total_ += width;
    return offset;
}

const RegisterLayout::Span &RegisterLayout::find(const std::string &name) const {
    for (const Span &span : spans_) {
        if (span.name == name) {
            return span;
        }
    }
    throw std::out_of_range("Unknown register: " + name);
}

size_t RegisterLayout::offset(const std::string &name) const {
    return find(name).offset;
}

size_t RegisterLayout::width(const std::string &name) const {
    return find(name).width;
}

RegisterLayout pair_distillation_layout(size_t n, size_t n_a, bool include_reference) {
    RegisterLayout layout;
    if (include_reference) {
        layout.add("R", n);
    }
    layout.add("S", n);
    layout.add("A_new", n_a);
    layout.add("A_bar", n_a);
    return layout;
}

namespace {

PauliString two_site(size_t total, size_t q1, size_t q2, char which) {
    return PauliString::single(total, q1, which) * PauliString::single(total, q2, which);
}

struct PairContext {
    const MeasurementSchedule &schedule;
    const SubsystemMask &a;
    std::vector<size_t> a_idx;
    RegisterLayout layout;
    DualCode code;
    size_t n, n_a, s_off, new_off, bar_off;

    PairContext(const MeasurementSchedule &schedule, const SubsystemMask &a,
                bool include_reference)
        : schedule(schedule),
          a(a),
          a_idx(a.indices()),
          layout(pair_distillation_layout(schedule.num_qubits, a.size(), include_reference)),
          code(schedule),
          n(schedule.num_qubits),
          n_a(a.size()),
          s_off(layout.offset("S")),
          new_off(layout.offset("A_new")),
          bar_off(layout.offset("A_bar")) {
        if (a.num_qubits != schedule.num_qubits) {
            throw std::invalid_argument("Subsystem mask width does not match the schedule.");
        }
    }

    size_t total() const {
        return layout.total_width();
    }

    // The reversed run measures the schedule operator with its A factors
    // moved onto A_new and its other factors kept on S.
    PauliString rehomed(const PauliString &op) const {
        PauliString out(total());
        out.phase = op.phase;
        size_t k = 0;
        for (size_t q = 0; q < n; q++) {
            size_t target = a.contains(q) ? new_off + k++ : s_off + q;
            out.x.set(target, op.x.get(q));
            out.z.set(target, op.z.get(q));
        }
        return out;
    }

    StabilizerTableau start_state(bool include_reference) const {
        StabilizerTableau t = StabilizerTableau::maximally_mixed(total());
        if (include_reference) {
            size_t r_off = layout.offset("R");
            for (size_t q = 0; q < n; q++) {
                t.measure_forced(two_site(total(), r_off + q, s_off + q, 'X'), +1);
                t.measure_forced(two_site(total(), r_off + q, s_off + q, 'Z'), +1);
            }
        }
        for (size_t k = 0; k < n_a; k++) {
            t.measure_forced(two_site(total(), new_off + k, bar_off + k, 'X'), +1);
            t.measure_forced(two_site(total(), new_off + k, bar_off + k, 'Z'), +1);
        }
        return t;
    }

    // Decodes s and applies the feedback on A_bar; fidelity is left zero.
    DistillationResult finish(StabilizerTableau &t, SignVector m, SignVector m_bar) const {
        SignVector s = m * m_bar;
        auto dec = code.decode(s, a);
        if (!dec) {
            throw std::logic_error("Sum vector escaped the coset union.");
        }
        PauliString fb(total());
        for (size_t k = 0; k < n_a; k++) {
            fb.x.set(bar_off + k, dec->pauli.x.get(k));
            fb.z.set(bar_off + k, dec->pauli.z.get(k));
        }
        t.apply_pauli(fb);
        DistillationResult result;
        result.m = std::move(m);
        result.m_bar = std::move(m_bar);
        result.s = std::move(s);
        result.feedback = dec->pauli;
        result.ambiguity_log2 = dec->ambiguity_log2;
        return result;
    }

    Dyadic pair_fidelity(StabilizerTableau &t) const {
        int64_t before = t.log2_prob();
        for (size_t k = 0; k < n_a; k++) {
            PauliString xx = two_site(total(), s_off + a_idx[k], bar_off + k, 'X');
            PauliString zz = two_site(total(), s_off + a_idx[k], bar_off + k, 'Z');
            if (!t.try_measure_forced(xx, +1) || !t.try_measure_forced(zz, +1)) {
                return Dyadic::zero();
            }
        }
        return Dyadic::pow2(t.log2_prob() - before);
    }
};

}  // namespace

DistillationResult distill_ab(const MeasurementSchedule &schedule, const SubsystemMask &a,
                              Rng &rng, bool include_reference) {
    PairContext ctx(schedule, a, include_reference);
    StabilizerTableau t = ctx.start_state(include_reference);
    SignVector m = t.run_schedule(schedule, rng, ctx.s_off);
    size_t tau = schedule.tau();
    SignVector m_bar(tau);
    for (size_t j = tau; j-- > 0;) {
        m_bar.set_sign(j, t.measure(ctx.rehomed(schedule.ops[j]), rng).outcome);
    }
    DistillationResult result = ctx.finish(t, std::move(m), std::move(m_bar));
    result.epr_fidelity = ctx.pair_fidelity(t);
    return result;
}

void enumerate_pair_distillations(const MeasurementSchedule &schedule, const SubsystemMask &a,
                                  const std::function<void(const PairBranch &)> &visit) {
    if (schedule.num_qubits > 4 || schedule.tau() > 8) {
        throw std::invalid_argument("Exhaustive distillation needs n <= 4 and tau <= 8.");
    }
    PairContext ctx(schedule, a, false);
    size_t tau = schedule.tau();
    std::vector<PauliString> ops;
    for (const PauliString &op : schedule.ops) {
        ops.push_back(op.embedded(ctx.total(), ctx.s_off));
    }
    for (size_t j = tau; j-- > 0;) {
        ops.push_back(ctx.rehomed(schedule.ops[j]));
    }
    StabilizerTableau start = ctx.start_state(false);
    enumerate_schedule_runs(
        start, ops,
        [&](const StabilizerTableau &leaf, const SignVector &outcomes, int64_t log2_prob) {
            SignVector m(tau);
            SignVector m_bar(tau);
            for (size_t j = 0; j < tau; j++) {
                m.set_sign(j, outcomes.sign_at(j));
                m_bar.set_sign(tau - 1 - j, outcomes.sign_at(tau + j));
            }
            StabilizerTableau state = leaf;
            DistillationResult result = ctx.finish(state, std::move(m), std::move(m_bar));
            StabilizerTableau probe = state;
            result.epr_fidelity = ctx.pair_fidelity(probe);
            visit(PairBranch{result, state, ctx.layout, log2_prob});
        });
}

Dyadic bell_overlap(const StabilizerTableau &state, const std::vector<size_t> &first,
                    const std::vector<size_t> &second, const PauliString &p) {
    if (first.size() != second.size() || p.num_qubits != first.size()) {
        throw std::invalid_argument("Pair lists and twist pattern must have equal width.");
    }
    StabilizerTableau t = state;
    int64_t before = t.log2_prob();
    for (size_t k = 0; k < first.size(); k++) {
        PauliString xx = two_site(t.num_qubits(), first[k], second[k], 'X');
        PauliString zz = two_site(t.num_qubits(), first[k], second[k], 'Z');
        int sx = p.z.get(k) ? -1 : +1;
        int sz = p.x.get(k) ? -1 : +1;
        if (!t.try_measure_forced(xx, sx) || !t.try_measure_forced(zz, sz)) {
            return Dyadic::zero();
        }
    }
    return Dyadic::pow2(t.log2_prob() - before);
}

namespace {

PauliString pattern_from_word(size_t num_qubits, uint64_t word) {
    PauliString p(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        p.x.set(q, (word >> (2 * q)) & 1);
        p.z.set(q, (word >> (2 * q + 1)) & 1);
    }
    return p;
}

void accumulate_bell_diagonal(std::map<std::string, Dyadic> &acc, const StabilizerTableau &state,
                              const std::vector<size_t> &first, const std::vector<size_t> &second,
                              int64_t log2_prob) {
    for (uint64_t word = 0; word < (uint64_t{1} << (2 * first.size())); word++) {
        PauliString p = pattern_from_word(first.size(), word);
        Dyadic overlap = bell_overlap(state, first, second, p);
        if (!overlap.is_zero()) {
            acc[p.str()].add_pow2(log2_prob - overlap.log2_den);
        }
    }
}

}  // namespace

std::map<std::string, Dyadic> distill_ab_average_exact(const MeasurementSchedule &schedule,
                                                       const SubsystemMask &a) {
    std::map<std::string, Dyadic> acc;
    RegisterLayout layout = pair_distillation_layout(schedule.num_qubits, a.size(), false);
    std::vector<size_t> first, second;
    std::vector<size_t> a_idx = a.indices();
    for (size_t k = 0; k < a.size(); k++) {
        first.push_back(layout.offset("S") + a_idx[k]);
        second.push_back(layout.offset("A_bar") + k);
    }
    enumerate_pair_distillations(schedule, a, [&](const PairBranch &branch) {
        accumulate_bell_diagonal(acc, branch.state, first, second, branch.log2_prob);
    });
    return acc;
}

std::map<std::string, double> distill_ab_average_sampled(const MeasurementSchedule &schedule,
                                                         const SubsystemMask &a, size_t runs,
                                                         Rng &rng) {
    PairContext ctx(schedule, a, false);
    std::vector<size_t> first, second;
    for (size_t k = 0; k < ctx.n_a; k++) {
        first.push_back(ctx.s_off + ctx.a_idx[k]);
        second.push_back(ctx.bar_off + k);
    }
    std::map<std::string, double> acc;
    for (size_t run = 0; run < runs; run++) {
        StabilizerTableau t = ctx.start_state(false);
        SignVector m = t.run_schedule(schedule, rng, ctx.s_off);
        SignVector m_bar(schedule.tau());
        for (size_t j = schedule.tau(); j-- > 0;) {
            m_bar.set_sign(j, t.measure(ctx.rehomed(schedule.ops[j]), rng).outcome);
        }
        ctx.finish(t, std::move(m), std::move(m_bar));
        for (uint64_t word = 0; word < (uint64_t{1} << (2 * ctx.n_a)); word++) {
            PauliString p = pattern_from_word(ctx.n_a, word);
            Dyadic overlap = bell_overlap(t, first, second, p);
            if (!overlap.is_zero()) {
                acc[p.str()] += overlap.to_double() / static_cast<double>(runs);
            }
        }
    }
    return acc;
}

std::map<std::string, Dyadic> sum_vector_histogram(const MeasurementSchedule &schedule,
                                                   const SubsystemMask &a) {
    std::map<std::string, Dyadic> hist;
    enumerate_pair_distillations(schedule, a, [&](const PairBranch &branch) {
        hist[branch.result.s.str()].add_pow2(branch.log2_prob);
    });
    return hist;
}

namespace {

ChoiResult finish_system_reference(const MeasurementSchedule &schedule, const DualCode &code,
                                   StabilizerTableau t, SignVector m, SignVector m_bar) {
    size_t n = schedule.num_qubits;
    SignVector s = m * m_bar;
    auto dec = code.decode_reverse(s);
    if (!dec) {
        throw std::logic_error("Sum vector escaped the reverse disturbance span.");
    }
    PauliString fb = dec->op;
    fb.phase = 0;
    t.apply_pauli(fb.embedded(2 * n, n));
    return ChoiResult{std::move(m), std::move(m_bar), std::move(s),
                      dec->selector,  fb,              std::move(t)};
}

}  // namespace

ChoiResult distill_system_reference(const MeasurementSchedule &schedule, Rng &rng) {
    size_t n = schedule.num_qubits;
    size_t tau = schedule.tau();
    DualCode code(schedule);
    StabilizerTableau t = StabilizerTableau::with_reference(n);
    SignVector m = t.run_schedule(schedule, rng, 0);
    SignVector m_bar(tau);
    for (size_t j = 0; j < tau; j++) {
        m_bar.set_sign(j, t.measure(schedule.ops[j].conjugate().embedded(2 * n, n), rng).outcome);
    }
    return finish_system_reference(schedule, code, std::move(t), std::move(m), std::move(m_bar));
}

std::map<std::string, Dyadic> system_reference_average_exact(const MeasurementSchedule &schedule) {
    size_t n = schedule.num_qubits;
    size_t tau = schedule.tau();
    if (n > 3 || tau > 6) {
        throw std::invalid_argument("Exhaustive mirror distillation needs n <= 3 and tau <= 6.");
    }
    DualCode code(schedule);
    std::vector<PauliString> ops;
    for (const PauliString &op : schedule.ops) {
        ops.push_back(op.embedded(2 * n, 0));
    }
    for (const PauliString &op : schedule.ops) {
        ops.push_back(op.conjugate().embedded(2 * n, n));
    }
    std::vector<size_t> first, second;
    for (size_t q = 0; q < n; q++) {
        first.push_back(q);
        second.push_back(n + q);
    }
    std::map<std::string, Dyadic> acc;
    enumerate_schedule_runs(
        StabilizerTableau::with_reference(n), ops,
        [&](const StabilizerTableau &leaf, const SignVector &outcomes, int64_t log2_prob) {
            SignVector m(tau);
            SignVector m_bar(tau);
            for (size_t j = 0; j < tau; j++) {
                m.set_sign(j, outcomes.sign_at(j));
                m_bar.set_sign(j, outcomes.sign_at(tau + j));
            }
            ChoiResult r =
                finish_system_reference(schedule, code, leaf, std::move(m), std::move(m_bar));
            accumulate_bell_diagonal(acc, r.state, first, second, log2_prob);
        });
    return acc;
}

MeasurementSchedule encoded_reference_schedule(const MeasurementSchedule &schedule,
                                               const CliffordMap &encoding) {
    size_t n = schedule.num_qubits;
    if (encoding.num_qubits() != n) {
        throw std::invalid_argument("Encoding width does not match the schedule.");
    }
    if (n == 0) {
        throw std::invalid_argument("Need at least one system qubit.");
    }
    MeasurementSchedule out(n + 1, {});
    out.append(encoding.image_of_x(0).embedded(n + 1, 0) * PauliString::single(n + 1, n, 'X'));
    out.append(encoding.image_of_z(0).embedded(n + 1, 0) * PauliString::single(n + 1, n, 'Z'));
    for (size_t j = 1; j < n; j++) {
        out.append(encoding.image_of_z(j).embedded(n + 1, 0));
    }
    for (const PauliString &op : schedule.ops) {
        out.append(op.embedded(n + 1, 0));
    }
    return out;
}

EncodedReferenceResult distill_encoded_reference(const MeasurementSchedule &schedule,
                                                 const CliffordMap &encoding, Rng &rng) {
    size_t n = schedule.num_qubits;
    size_t tau = schedule.tau();
    MeasurementSchedule rows = encoded_reference_schedule(schedule, encoding);
    DualCode code(rows);

    StabilizerTableau t = StabilizerTableau::maximally_mixed(n + 1);
    for (size_t row = 0; row < n + 1; row++) {
        t.measure_forced(rows.ops[row], +1);
    }
    SignVector m = t.run_schedule(schedule, rng, 0);
    SignVector m_bar(tau + n - 1);
    for (size_t j = tau; j-- > 0;) {
        m_bar.set_sign(j, t.measure(rows.ops[n + 1 + j], rng).outcome);
    }
    for (size_t j = n; j-- > 1;) {
        m_bar.set_sign(tau + j - 1, t.measure(rows.ops[j + 1], rng).outcome);
    }

    SignVector s(rows.tau());
    for (size_t j = 1; j < n; j++) {
        s.set_sign(j + 1, m_bar.sign_at(tau + j - 1));
    }
    for (size_t j = 0; j < tau; j++) {
        s.set_sign(n + 1 + j, m.sign_at(j) * m_bar.sign_at(j));
    }

    EncodedReferenceResult result;
    result.m = std::move(m);
    result.m_bar = std::move(m_bar);
    result.feedback = PauliString::identity(1);
    auto dec = code.decode(s, SubsystemMask::from_indices(n + 1, {n}));
    result.s = std::move(s);
    if (!dec) {
        result.decode_failed = true;
    } else {
        result.feedback = dec->pauli;
        result.feedback.phase = 0;
        result.ambiguity_log2 = dec->ambiguity_log2;
        PauliString fb(n + 1);
        fb.x.set(n, result.feedback.x.get(0));
        fb.z.set(n, result.feedback.z.get(0));
        t.apply_pauli(fb);
    }
    int64_t before = t.log2_prob();
    if (t.try_measure_forced(rows.ops[0], +1) && t.try_measure_forced(rows.ops[1], +1)) {
        result.epr_fidelity = Dyadic::pow2(t.log2_prob() - before);
    }
    return result;
}

}  // namespace moncode
