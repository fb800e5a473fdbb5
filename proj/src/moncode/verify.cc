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

#include "moncode/verify.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "moncode/distill.h"
#include "moncode/dual_code.h"
#include "moncode/groups.h"
#include "moncode/tableau.h"

namespace moncode {
namespace {

PauliString random_measurement(Rng &rng, size_t n) {
    PauliString p(n);
    while (p.is_identity()) {
        for (size_t q = 0; q < n; q++) {
            uint64_t w = rng.next_below(4);
            p.x.set(q, w & 1);
            p.z.set(q, w >> 1);
        }
    }
    p.phase = rng.next_bit() ? 2 : 0;
    return p;
}

MeasurementSchedule random_schedule(Rng &rng, size_t n, size_t tau) {
    MeasurementSchedule s(n, {});
    for (size_t j = 0; j < tau; j++) {
        s.append(random_measurement(rng, n));
    }
    return s;
}

SubsystemMask random_mask(Rng &rng, size_t n, bool nonempty) {
    SubsystemMask m(n);
    for (size_t q = 0; q < n; q++) {
        m.bits.set(q, rng.next_bit());
    }
    if (nonempty && m.size() == 0) {
        m.bits.set(rng.next_below(n), true);
    }
    return m;
}

PauliString pattern(size_t num_qubits, uint64_t word) {
    PauliString p(num_qubits);
    for (size_t q = 0; q < num_qubits; q++) {
        p.x.set(q, (word >> (2 * q)) & 1);
        p.z.set(q, (word >> (2 * q + 1)) & 1);
    }
    return p;
}

PauliString embed_on_mask(const PauliString &small, const SubsystemMask &mask) {
    PauliString out(mask.num_qubits);
    out.phase = small.phase;
    std::vector<size_t> idx = mask.indices();
    for (size_t k = 0; k < idx.size(); k++) {
        out.x.set(idx[k], small.x.get(k));
        out.z.set(idx[k], small.z.get(k));
    }
    return out;
}

bool supported_on(const PauliString &p, const SubsystemMask &mask) {
    for (size_t q = 0; q < p.num_qubits; q++) {
        if (!mask.bits.get(q) && (p.x.get(q) || p.z.get(q))) {
            return false;
        }
    }
    return true;
}

// Span of the disturbance rows together with the cut codeword rows.
Gf2RowSpace coset_union(const DualCode &code, const SubsystemMask &a) {
    Gf2RowSpace space(code.tau());
    for (const BitVec &row : code.error_rows()) {
        space.insert(row);
    }
    for (size_t q : a.indices()) {
        space.insert(code.codeword_rows()[q]);
        space.insert(code.codeword_rows()[code.num_qubits() + q]);
    }
    return space;
}

Dyadic total_mass(const std::map<std::string, Dyadic> &hist) {
    Dyadic sum;
    for (const auto &entry : hist) {
        sum.add(entry.second);
    }
    return sum;
}

Dyadic div_pow2(Dyadic d, int64_t log2_divisor) {
    if (!d.is_zero()) {
        d.log2_den += log2_divisor;
        while ((d.num & 1) == 0 && d.log2_den > 0) {
            d.num >>= 1;
            d.log2_den--;
        }
    }
    return d;
}

std::string describe(const MeasurementSchedule &schedule) {
    std::ostringstream out;
    out << "n=" << schedule.num_qubits << " ops=[";
    for (size_t j = 0; j < schedule.ops.size(); j++) {
        out << (j ? "," : "") << schedule.ops[j].str();
    }
    out << "]";
    return out.str();
}

void record_fail(CheckResult &r, const std::string &detail) {
    r.passed = false;
    if (r.detail.empty()) {
        r.detail = detail;
    }
}

// Probability of forcing outcomes m through the schedule, conjugating the
// state by `inserted`, then forcing outcomes m_bar through the reversed
// schedule, starting from the maximally mixed state.
Dyadic insertion_probability(const MeasurementSchedule &schedule, const PauliString &inserted,
                             const SignVector &m, const SignVector &m_bar) {
    StabilizerTableau t = StabilizerTableau::maximally_mixed(schedule.num_qubits);
    size_t tau = schedule.ops.size();
    for (size_t j = 0; j < tau; j++) {
        if (!t.try_measure_forced(schedule.ops[j], m.sign_at(j))) {
            return Dyadic::zero();
        }
    }
    t.apply_pauli(inserted);
    for (size_t j = tau; j-- > 0;) {
        if (!t.try_measure_forced(schedule.ops[j], m_bar.sign_at(j))) {
            return Dyadic::zero();
        }
    }
    return Dyadic::pow2(t.log2_prob());
}

SignVector sign_vector_from_word(size_t len, uint64_t word) {
    SignVector s(len);
    for (size_t k = 0; k < len; k++) {
        s.bits.set(k, (word >> k) & 1);
    }
    return s;
}

SubsystemMask widen(const SubsystemMask &mask, size_t total) {
    return SubsystemMask::from_indices(total, mask.indices());
}

size_t draw_n(Rng &rng, const VerifyOptions &options, size_t cap) {
    size_t hi = std::min(options.n_max, cap);
    return 1 + rng.next_below(hi == 0 ? 1 : hi);
}

size_t draw_tau(Rng &rng, const VerifyOptions &options, size_t cap) {
    return rng.next_below(std::min(options.tau_max, cap) + 1);
}

}  // namespace

namespace checks {

CheckResult conditional_entropy_formula(const VerifyOptions &options) {
    CheckResult r{"conditional-entropy-formula", true, 0, ""};
    Rng rng = Rng(options.seed).split(1);
    for (size_t trial = 0; trial < options.trials && r.passed; trial++) {
        size_t n = draw_n(rng, options, 64);
        MeasurementSchedule schedule = random_schedule(rng, n, draw_tau(rng, options, 64));
        CodeAnalysis analysis(schedule);
        SubsystemMask a = random_mask(rng, n, false);
        int64_t predicted = analysis.entropies(a).s_a_given_b;

        SubsystemMask system = SubsystemMask::contiguous(2 * n, 0, n);
        SubsystemMask b_wide = widen(a.complement(), 2 * n);
        for (size_t run = 0; run < 3; run++) {
            StabilizerTableau t = StabilizerTableau::with_reference(n);
            t.run_schedule(schedule, rng);
            int64_t direct = t.subsystem_entropy(system) - t.subsystem_entropy(b_wide);
            r.cases++;
            if (direct != predicted) {
                record_fail(r, describe(schedule) + " mask " + a.bits.str() + ": code says " +
                                   std::to_string(predicted) + ", state says " +
                                   std::to_string(direct));
                break;
            }
        }
    }
    return r;
}

CheckResult maximal_entanglement_iff_recoverable(const VerifyOptions &options) {
    CheckResult r{"maximal-entanglement-iff-recoverable", true, 0, ""};
    Rng rng = Rng(options.seed).split(2);
    for (size_t trial = 0; trial < options.trials && r.passed; trial++) {
        size_t n = draw_n(rng, options, 64);
        MeasurementSchedule schedule = random_schedule(rng, n, draw_tau(rng, options, 64));
        DualCode code(schedule);
        SubsystemMask a = random_mask(rng, n, true);
        bool recoverable = code.recoverable(a);
        int64_t na = static_cast<int64_t>(a.size());

        SubsystemMask a_wide = widen(a, 2 * n);
        SubsystemMask b_wide = widen(a.complement(), 2 * n);
        SubsystemMask system = SubsystemMask::contiguous(2 * n, 0, n);
        SubsystemMask ref = SubsystemMask::contiguous(2 * n, n, n);
        SubsystemMask a_and_ref(2 * n);
        a_and_ref.bits = a_wide.bits ^ ref.bits;
        for (size_t run = 0; run < 2; run++) {
            StabilizerTableau t = StabilizerTableau::with_reference(n);
            t.run_schedule(schedule, rng);
            int64_t s_a = t.subsystem_entropy(a_wide);
            int64_t s_b = t.subsystem_entropy(b_wide);
            int64_t s_ab = t.subsystem_entropy(system);
            int64_t i_ab = s_a + s_b - s_ab;
            int64_t i_ar = s_a + t.subsystem_entropy(ref) - t.subsystem_entropy(a_and_ref);
            r.cases++;
            bool maximal = i_ab == 2 * na;
            if (maximal != recoverable || (recoverable && (i_ar != 0 || s_ab - s_b != -na))) {
                record_fail(r, describe(schedule) + " mask " + a.bits.str() + ": recoverable=" +
                                   std::to_string(recoverable) + " I(A,B)=" + std::to_string(i_ab) +
                                   " I(A,R)=" + std::to_string(i_ar) + " n_A=" +
                                   std::to_string(na));
                break;
            }
        }
    }
    return r;
}

CheckResult sum_vector_uniformity(const VerifyOptions &options) {
    CheckResult r{"sum-vector-uniformity", true, 0, ""};
    Rng rng = Rng(options.seed).split(3);
    for (size_t trial = 0; trial < options.trials && r.passed; trial++) {
        size_t n = draw_n(rng, options, 3);
        size_t tau = draw_tau(rng, options, 5);
        MeasurementSchedule schedule = random_schedule(rng, n, tau);
        SubsystemMask a = random_mask(rng, n, true);
        DualCode code(schedule);

        std::map<std::string, Dyadic> hist = sum_vector_histogram(schedule, a);
        Gf2RowSpace span = coset_union(code, a);
        Dyadic expected = Dyadic::pow2(-static_cast<int64_t>(span.rank()));
        bool ok = total_mass(hist) == Dyadic::one();
        for (uint64_t word = 0; ok && word < (uint64_t{1} << tau); word++) {
            SignVector s = sign_vector_from_word(tau, word);
            auto it = hist.find(s.str());
            if (span.contains(s.bits)) {
                ok = it != hist.end() && it->second == expected;
            } else {
                ok = it == hist.end();
            }
            r.cases++;
        }
        if (!ok) {
            record_fail(r, describe(schedule) + " mask " + a.bits.str() +
                               ": sum vector mass is not uniform over the expected span");
        }
    }
    return r;
}

CheckResult distilled_average_uniformity(const VerifyOptions &options) {
    CheckResult r{"distilled-average-uniformity", true, 0, ""};
    Rng rng = Rng(options.seed).split(4);
    for (size_t trial = 0; trial < options.trials && r.passed; trial++) {
        size_t n = draw_n(rng, options, 3);
        size_t tau = draw_tau(rng, options, 5);
        MeasurementSchedule schedule = random_schedule(rng, n, tau);
        SubsystemMask a = random_mask(rng, n, true);
        DualCode code(schedule);
        size_t na = a.size();

        std::map<std::string, Dyadic> avg = distill_ab_average_exact(schedule, a);
        Dyadic expected = Dyadic::pow2(-code.log2_null_count(a));
        bool ok = total_mass(avg) == Dyadic::one();
        for (uint64_t word = 0; ok && word < (uint64_t{1} << (2 * na)); word++) {
            PauliString small = pattern(na, word);
            bool null = code.in_error_span(code.codeword(embed_on_mask(small, a)));
            auto it = avg.find(small.str());
            if (null) {
                ok = it != avg.end() && it->second == expected;
            } else {
                ok = it == avg.end();
            }
            r.cases++;
        }
        if (!ok) {
            record_fail(r, describe(schedule) + " mask " + a.bits.str() +
                               ": averaged output is not uniform over the null patterns");
        }
    }
    return r;
}

CheckResult mirror_average_uniformity(const VerifyOptions &options) {
    CheckResult r{"mirror-average-uniformity", true, 0, ""};
    Rng rng = Rng(options.seed).split(5);
    for (size_t trial = 0; trial < options.trials && r.passed; trial++) {
        size_t n = draw_n(rng, options, 3);
        size_t tau = draw_tau(rng, options, 6);
        MeasurementSchedule schedule = random_schedule(rng, n, tau);

        std::map<std::string, Dyadic> avg = system_reference_average_exact(schedule);
        PauliGroupGens stab = stabilizer_group(schedule);
        std::vector<PauliString> elements = stab.elements();
        Dyadic expected = Dyadic::pow2(-static_cast<int64_t>(stab.rank()));
        bool ok = total_mass(avg) == Dyadic::one() && avg.size() == elements.size();
        for (const PauliString &p : elements) {
            auto it = avg.find(p.str());
            ok = ok && it != avg.end() && it->second == expected;
            r.cases++;
        }
        if (!ok) {
            record_fail(r, describe(schedule) +
                               ": averaged mirror output is not uniform over the stabilizers");
        }
    }
    return r;
}

CheckResult mirror_run_correlations(const VerifyOptions &options) {
    CheckResult r{"mirror-run-correlations", true, 0, ""};
    Rng rng = Rng(options.seed).split(6);
    for (size_t trial = 0; trial < options.trials && r.passed; trial++) {
        size_t n = draw_n(rng, options, 64);
        MeasurementSchedule schedule = random_schedule(rng, n, draw_tau(rng, options, 64));
        PauliGroupGens logic = logical_group(schedule);

        for (size_t run = 0; run < 2 && r.passed; run++) {
            ChoiResult c = distill_system_reference(schedule, rng);
            bool ok = c.state.num_generators() == 2 * n;
            for (const PauliString &g : logic.generators()) {
                PauliString paired = g.embedded(2 * n, 0) * g.conjugate().embedded(2 * n, n);
                ok = ok && c.state.expectation(paired) == +1;
                r.cases++;
            }

            StabilizerTableau replay = StabilizerTableau::maximally_mixed(n);
            replay.run_schedule_forced(schedule, c.m);
            for (const PauliString &g : replay.generators()) {
                ok = ok && c.state.expectation(g.embedded(2 * n, 0)) == +1;
                ok = ok && c.state.expectation(g.conjugate().embedded(2 * n, n)) == +1;
                PauliString probe(n);
                for (size_t q = 0; q < n; q++) {
                    if (g.x.get(q) || g.z.get(q)) {
                        probe.x.set(q, g.z.get(q));
                        probe.z.set(q, !g.z.get(q));
                        break;
                    }
                }
                PauliString paired = probe.embedded(2 * n, 0) * probe.conjugate().embedded(2 * n, n);
                ok = ok && c.state.expectation(paired) == 0;
                r.cases += 3;
            }
            if (!ok) {
                record_fail(r, describe(schedule) + ": a mirror run lost a logical correlation");
            }
        }
    }
    return r;
}

CheckResult reversal_sum_membership(const VerifyOptions &options) {
    CheckResult r{"reversal-sum-membership", true, 0, ""};
    Rng rng = Rng(options.seed).split(7);
    for (size_t trial = 0; trial < options.trials && r.passed; trial++) {
        size_t n = draw_n(rng, options, 64);
        size_t tau = draw_tau(rng, options, 64);
        MeasurementSchedule schedule = random_schedule(rng, n, tau);
        DualCode code(schedule);

        for (size_t run = 0; run < 3; run++) {
            ChoiResult c = distill_system_reference(schedule, rng);
            BitVec rebuilt(tau);
            for (size_t j = 0; j < tau; j++) {
                if (c.selector.get(j)) {
                    rebuilt ^= code.reverse_error_rows()[j];
                }
            }
            r.cases++;
            if (c.s.bits != (c.m.bits ^ c.m_bar.bits) || !code.in_reverse_error_span(c.s) ||
                rebuilt != c.s.bits || !code.decode_reverse(c.s).has_value()) {
                record_fail(r, describe(schedule) + ": mirror sum vector " + c.s.str() +
                                   " escaped the reversed disturbance span");
                break;
            }
        }
    }
    return r;
}

CheckResult recoverable_distillation(const VerifyOptions &options) {
    CheckResult r{"recoverable-distillation", true, 0, ""};
    Rng rng = Rng(options.seed).split(8);
    for (size_t trial = 0; trial < options.trials && r.passed; trial++) {
        size_t n = 0;
        MeasurementSchedule schedule(1, {});
        SubsystemMask a;
        bool found = false;
        for (size_t attempt = 0; attempt < 400 && !found; attempt++) {
            n = draw_n(rng, options, 6);
            size_t tau = 1 + draw_tau(rng, options, 7);
            schedule = random_schedule(rng, n, tau);
            size_t na = 1 + rng.next_below(std::max<size_t>(1, n / 2));
            a = SubsystemMask(n);
            while (a.size() < na) {
                a.bits.set(rng.next_below(n), true);
            }
            found = DualCode(schedule).recoverable(a);
        }
        if (!found) {
            continue;
        }
        size_t na = a.size();

        bool ok = true;
        for (size_t run = 0; run < 2; run++) {
            DistillationResult out = distill_ab(schedule, a, rng);
            ok = ok && out.epr_fidelity == Dyadic::one() && out.ambiguity_log2 == 0 &&
                 out.s.bits == (out.m.bits ^ out.m_bar.bits);
            r.cases++;
        }
        if (ok && n <= 4 && schedule.ops.size() <= 8) {
            Dyadic no_feedback;
            enumerate_pair_distillations(schedule, a, [&](const PairBranch &branch) {
                if (branch.result.epr_fidelity != Dyadic::one() ||
                    branch.result.ambiguity_log2 != 0) {
                    ok = false;
                }
                if (branch.result.feedback.is_identity()) {
                    no_feedback.add(Dyadic::pow2(branch.log2_prob));
                }
            });
            ok = ok && no_feedback == Dyadic::pow2(-2 * static_cast<int64_t>(na));
            r.cases++;
        }
        if (!ok) {
            record_fail(r, describe(schedule) + " mask " + a.bits.str() +
                               ": a recoverable cut failed to distill a perfect pair");
        }
    }
    return r;
}

CheckResult stabilizer_sign_determinism(const VerifyOptions &options) {
    CheckResult r{"stabilizer-sign-determinism", true, 0, ""};
    Rng rng = Rng(options.seed).split(9);
    for (size_t trial = 0; trial < options.trials && r.passed; trial++) {
        size_t n = draw_n(rng, options, 64);
        MeasurementSchedule schedule = random_schedule(rng, n, draw_tau(rng, options, 64));
        PauliGroupGens stab = stabilizer_group(schedule);
        PauliGroupGens logic = logical_group(schedule);

        StabilizerTableau t = StabilizerTableau::maximally_mixed(n);
        SignVector m = t.run_schedule(schedule, rng);

        bool ok = true;
        std::vector<PauliString> probes = stab.generators();
        for (size_t extra = 0; extra < 4 && stab.rank() > 0; extra++) {
            PauliString product = PauliString::identity(n);
            for (const PauliString &g : stab.generators()) {
                if (rng.next_bit()) {
                    product = product * g;
                }
            }
            probes.push_back(product);
        }
        for (const PauliString &p : probes) {
            ok = ok && t.expectation(p) == signed_eigenvalue(schedule, m, p);
            r.cases++;
        }
        std::vector<std::pair<PauliString, PauliString>> pairs = logical_pairs(logic, stab);
        if (!pairs.empty()) {
            bool threw = false;
            try {
                signed_eigenvalue(schedule, m, pairs[0].first);
            } catch (const std::invalid_argument &) {
                threw = true;
            }
            ok = ok && threw;
            r.cases++;
        }
        if (!ok) {
            record_fail(r, describe(schedule) +
                               ": stabilizer sign disagreed with the outcome reconstruction");
        }
    }
    return r;
}

CheckResult logical_recursion_matches_span(const VerifyOptions &options) {
    CheckResult r{"logical-recursion-matches-span", true, 0, ""};
    Rng rng = Rng(options.seed).split(10);
    for (size_t trial = 0; trial < options.trials && r.passed; trial++) {
        size_t n = draw_n(rng, options, 6);
        MeasurementSchedule schedule = random_schedule(rng, n, draw_tau(rng, options, 64));
        DualCode code(schedule);
        PauliGroupGens logic = logical_group(schedule);

        for (uint64_t word = 0; word < (uint64_t{1} << (2 * n)); word++) {
            PauliString p = pattern(n, word);
            bool in_span = code.in_error_span(code.codeword(p));
            r.cases++;
            if (logic.contains(p) != in_span) {
                record_fail(r, describe(schedule) + ": " + p.str() +
                                   " disagrees between recursion and span membership");
                break;
            }
        }
    }
    return r;
}

CheckResult commutant_identities(const VerifyOptions &options) {
    CheckResult r{"commutant-identities", true, 0, ""};
    Rng rng = Rng(options.seed).split(11);
    for (size_t trial = 0; trial < options.trials && r.passed; trial++) {
        size_t n = draw_n(rng, options, 64);
        MeasurementSchedule schedule = random_schedule(rng, n, draw_tau(rng, options, 64));
        PauliGroupGens stab = stabilizer_group(schedule);
        PauliGroupGens logic = logical_group(schedule);

        bool ok = logic.same_group(stab.commutant());
        ok = ok && stab.commutant().commutant().same_group(stab);
        ok = ok && logic.contains_all(stab);
        ok = ok && stab.rank() + logic.rank() == 2 * n;
        r.cases += 4;
        if (!ok) {
            record_fail(r, describe(schedule) + ": commutant identities failed");
        }
    }
    return r;
}

CheckResult cleaning_identities(const VerifyOptions &options) {
    CheckResult r{"cleaning-identities", true, 0, ""};
    Rng rng = Rng(options.seed).split(12);
    for (size_t trial = 0; trial < options.trials && r.passed; trial++) {
        size_t n = draw_n(rng, options, 6);
        MeasurementSchedule schedule = random_schedule(rng, n, draw_tau(rng, options, 64));
        CodeAnalysis analysis(schedule);
        SubsystemMask a = random_mask(rng, n, false);
        SubsystemMask full = SubsystemMask::full(n);
        CleaningReport cleaning = analysis.cleaning(a);

        PauliGroupGens stab = stabilizer_group(schedule);
        PauliGroupGens logic = logical_group(schedule);
        int64_t logical_in_a = 0;
        for (const PauliString &p : logic.elements()) {
            logical_in_a += supported_on(p, a) ? 1 : 0;
        }
        int64_t stab_in_a = 0;
        for (const PauliString &p : stab.elements()) {
            stab_in_a += supported_on(p, a) ? 1 : 0;
        }
        auto log2_exact = [](int64_t count) {
            int64_t log2 = 0;
            while ((int64_t{1} << log2) < count) {
                log2++;
            }
            return (int64_t{1} << log2) == count ? log2 : int64_t{-1};
        };

        bool ok = cleaning.identities_hold;
        ok = ok && cleaning.g_a + cleaning.g_b == cleaning.g;
        ok = ok && cleaning.g == static_cast<int64_t>(logic.rank()) -
                                     static_cast<int64_t>(stab.rank());
        ok = ok && cleaning.g == 2 * logical_qubit_count(logic, stab);
        ok = ok && cleaning.g_a == log2_exact(logical_in_a) - log2_exact(stab_in_a);
        ok = ok && analysis.code().log2_null_count(full) == static_cast<int64_t>(logic.rank());
        ok = ok && analysis.extended().log2_null_count(full) == static_cast<int64_t>(stab.rank());
        ok = ok && analysis.code().log2_null_count(full) +
                           analysis.extended().log2_null_count(full) ==
                       2 * static_cast<int64_t>(n);
        r.cases += 8;
        if (!ok) {
            record_fail(r, describe(schedule) + " mask " + a.bits.str() +
                               ": cleaning counts disagree with the group dimensions");
        }
    }
    return r;
}

CheckResult insertion_shift_identity(const VerifyOptions &options) {
    CheckResult r{"insertion-shift-identity", true, 0, ""};
    Rng rng = Rng(options.seed).split(13);
    for (size_t trial = 0; trial < options.trials && r.passed; trial++) {
        size_t n = draw_n(rng, options, 6);
        size_t tau = draw_tau(rng, options, 8);
        MeasurementSchedule schedule = random_schedule(rng, n, tau);
        SubsystemMask a = random_mask(rng, n, true);
        DualCode code(schedule);
        PauliString inserted =
            embed_on_mask(pattern(a.size(), rng.next_below(uint64_t{1} << (2 * a.size()))), a);
        BitVec shift = code.codeword_bits(inserted);
        PauliString nothing = PauliString::identity(n);

        bool ok = true;
        auto check_pair = [&](const SignVector &m, const SignVector &m_bar) {
            Dyadic lhs = insertion_probability(schedule, inserted, m, m_bar);
            Dyadic rhs = insertion_probability(schedule, nothing, m,
                                               SignVector(m_bar.bits ^ shift));
            ok = ok && lhs == rhs;
            r.cases++;
        };
        if (tau <= 4) {
            for (uint64_t fwd = 0; fwd < (uint64_t{1} << tau) && ok; fwd++) {
                for (uint64_t rev = 0; rev < (uint64_t{1} << tau) && ok; rev++) {
                    check_pair(sign_vector_from_word(tau, fwd), sign_vector_from_word(tau, rev));
                }
            }
        } else {
            for (size_t k = 0; k < 16 && ok; k++) {
                check_pair(sign_vector_from_word(tau, rng.next_below(uint64_t{1} << tau)),
                           sign_vector_from_word(tau, rng.next_below(uint64_t{1} << tau)));
            }
            for (size_t k = 0; k < 8 && ok; k++) {
                StabilizerTableau t = StabilizerTableau::maximally_mixed(n);
                SignVector m = t.run_schedule(schedule, rng);
                t.apply_pauli(inserted);
                SignVector m_bar(tau);
                for (size_t j = tau; j-- > 0;) {
                    m_bar.set_sign(j, t.measure(schedule.ops[j], rng).outcome);
                }
                check_pair(m, m_bar);
            }
        }
        if (!ok) {
            record_fail(r, describe(schedule) + " inserted " + inserted.str() +
                               ": shifting the reversed outcomes changed the probability");
        }
    }
    return r;
}

CheckResult insertion_probability_flatness(const VerifyOptions &options) {
    CheckResult r{"insertion-probability-flatness", true, 0, ""};
    Rng rng = Rng(options.seed).split(14);
    for (size_t trial = 0; trial < options.trials && r.passed; trial++) {
        size_t n = draw_n(rng, options, 6);
        size_t tau = draw_tau(rng, options, 6);
        MeasurementSchedule schedule = random_schedule(rng, n, tau);
        SubsystemMask a = random_mask(rng, n, true);
        DualCode code(schedule);
        PauliString inserted =
            embed_on_mask(pattern(a.size(), rng.next_below(uint64_t{1} << (2 * a.size()))), a);
        BitVec shift = code.codeword_bits(inserted);
        Dyadic expected = Dyadic::pow2(-code.error_span_rank());

        std::vector<BitVec> candidates;
        if (tau <= 5) {
            for (uint64_t word = 0; word < (uint64_t{1} << tau); word++) {
                candidates.push_back(sign_vector_from_word(tau, word).bits);
            }
        } else {
            for (size_t k = 0; k < 8; k++) {
                BitVec in_span(tau);
                for (const BitVec &row : code.error_rows()) {
                    if (rng.next_bit()) {
                        in_span ^= row;
                    }
                }
                candidates.push_back(in_span ^ shift);
                candidates.push_back(sign_vector_from_word(tau, rng.next_below(uint64_t{1} << tau)).bits);
            }
        }
        bool ok = true;
        for (const BitVec &s_bits : candidates) {
            Dyadic total;
            for (uint64_t fwd = 0; fwd < (uint64_t{1} << tau); fwd++) {
                SignVector m = sign_vector_from_word(tau, fwd);
                total.add(insertion_probability(schedule, inserted, m,
                                                SignVector(m.bits ^ s_bits)));
            }
            bool member = code.in_error_span(SignVector(s_bits ^ shift));
            ok = ok && total == (member ? expected : Dyadic::zero());
            r.cases++;
            if (!ok) {
                break;
            }
        }
        if (!ok) {
            record_fail(r, describe(schedule) + " inserted " + inserted.str() +
                               ": summed insertion probability is not flat on the coset");
        }
    }
    return r;
}

CheckResult joint_probability_average(const VerifyOptions &options) {
    CheckResult r{"joint-probability-average", true, 0, ""};
    Rng rng = Rng(options.seed).split(15);
    for (size_t trial = 0; trial < options.trials && r.passed; trial++) {
        size_t n = draw_n(rng, options, 3);
        size_t tau = draw_tau(rng, options, 4);
        MeasurementSchedule schedule = random_schedule(rng, n, tau);
        SubsystemMask a = random_mask(rng, n, true);
        size_t na = a.size();

        std::map<std::string, Dyadic> joint;
        enumerate_pair_distillations(schedule, a, [&](const PairBranch &branch) {
            joint[branch.result.m.str() + "|" + branch.result.m_bar.str()].add(
                Dyadic::pow2(branch.log2_prob));
        });

        bool ok = true;
        for (uint64_t fwd = 0; fwd < (uint64_t{1} << tau) && ok; fwd++) {
            for (uint64_t rev = 0; rev < (uint64_t{1} << tau) && ok; rev++) {
                SignVector m = sign_vector_from_word(tau, fwd);
                SignVector m_bar = sign_vector_from_word(tau, rev);
                Dyadic averaged;
                for (uint64_t word = 0; word < (uint64_t{1} << (2 * na)); word++) {
                    averaged.add(insertion_probability(
                        schedule, embed_on_mask(pattern(na, word), a), m, m_bar));
                }
                averaged = div_pow2(averaged, 2 * static_cast<int64_t>(na));
                auto it = joint.find(m.str() + "|" + m_bar.str());
                Dyadic direct = it == joint.end() ? Dyadic::zero() : it->second;
                ok = direct == averaged;
                r.cases++;
            }
        }
        if (!ok) {
            record_fail(r, describe(schedule) + " mask " + a.bits.str() +
                               ": joint branch probability is not the insertion average");
        }
    }
    return r;
}

CheckResult outcome_distribution_flatness(const VerifyOptions &options) {
    CheckResult r{"outcome-distribution-flatness", true, 0, ""};
    Rng rng = Rng(options.seed).split(16);
    for (size_t trial = 0; trial < options.trials && r.passed; trial++) {
        size_t n = draw_n(rng, options, 6);
        size_t tau = draw_tau(rng, options, 10);
        MeasurementSchedule schedule = random_schedule(rng, n, tau);

        StabilizerTableau start = StabilizerTableau::maximally_mixed(n);
        uint64_t count = 0;
        int64_t shared = 1;
        bool ok = true;
        enumerate_schedule_runs(start, schedule.ops,
                                [&](const StabilizerTableau &, const SignVector &, int64_t lp) {
                                    if (count == 0) {
                                        shared = lp;
                                    }
                                    ok = ok && lp == shared;
                                    count++;
                                });
        ok = ok && count == (uint64_t{1} << -shared);
        r.cases++;
        if (!ok) {
            record_fail(r, describe(schedule) + ": outcome distribution is not flat");
        }
    }
    return r;
}

}  // namespace checks

std::vector<std::string> verify_suites() {
    return {"theorems", "lemmas", "groups", "probability", "all"};
}

std::vector<CheckResult> run_verify_suite(const std::string &suite, const VerifyOptions &options) {
    bool all = suite == "all";
    std::vector<CheckResult> results;
    if (all || suite == "theorems") {
        results.push_back(checks::conditional_entropy_formula(options));
        results.push_back(checks::maximal_entanglement_iff_recoverable(options));
    }
    if (all || suite == "lemmas") {
        results.push_back(checks::sum_vector_uniformity(options));
        results.push_back(checks::distilled_average_uniformity(options));
        results.push_back(checks::mirror_average_uniformity(options));
        results.push_back(checks::mirror_run_correlations(options));
        results.push_back(checks::reversal_sum_membership(options));
        results.push_back(checks::recoverable_distillation(options));
        results.push_back(checks::insertion_shift_identity(options));
        results.push_back(checks::insertion_probability_flatness(options));
        results.push_back(checks::joint_probability_average(options));
    }
    if (all || suite == "groups") {
        results.push_back(checks::stabilizer_sign_determinism(options));
        results.push_back(checks::logical_recursion_matches_span(options));
        results.push_back(checks::commutant_identities(options));
        results.push_back(checks::cleaning_identities(options));
    }
    if (all || suite == "probability") {
        results.push_back(checks::outcome_distribution_flatness(options));
    }
    if (results.empty()) {
        throw std::invalid_argument("Unknown verify suite: " + suite);
    }
    return results;
}

}  // namespace moncode
