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

#include "moncode/dual_code.h"

#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "moncode/tableau.h"

using namespace moncode;

namespace {

MeasurementSchedule sched(size_t n, const std::vector<std::string> &ops) {
    MeasurementSchedule s(n, {});
    for (const std::string &text : ops) {
        s.append(PauliString::from_str(text));
    }
    return s;
}

PauliString embed_on_mask(const PauliString &small, const SubsystemMask &mask) {
    PauliString full(mask.num_qubits);
    std::vector<size_t> idx = mask.indices();
    for (size_t k = 0; k < idx.size(); k++) {
        full.x.set(idx[k], small.x.get(k));
        full.z.set(idx[k], small.z.get(k));
    }
    full.phase = small.phase;
    return full;
}

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

// All 4^k sign-free patterns on k qubits.
std::vector<PauliString> all_patterns(size_t k) {
    std::vector<PauliString> out;
    for (uint64_t code = 0; code < (uint64_t{1} << (2 * k)); code++) {
        PauliString p(k);
        for (size_t q = 0; q < k; q++) {
            p.x.set(q, (code >> (2 * q)) & 1);
            p.z.set(q, (code >> (2 * q + 1)) & 1);
        }
        out.push_back(p);
    }
    return out;
}

// (x_0..x_{k-1}, z_0..z_{k-1}) row used by decode's tie break.
BitVec pattern_key(const PauliString &p) {
    BitVec key(2 * p.num_qubits);
    for (size_t q = 0; q < p.num_qubits; q++) {
        key.set(q, p.x.get(q));
        key.set(p.num_qubits + q, p.z.get(q));
    }
    return key;
}

std::vector<std::string> coset_strs(const DualCode &code, const PauliString &p) {
    std::vector<std::string> out;
    BitVec base = code.codeword_bits(p);
    for (uint64_t bits = 0; bits < (uint64_t{1} << code.tau()); bits++) {
        BitVec e(code.tau());
        for (size_t j = 0; j < code.tau(); j++) {
            e.set(j, (bits >> j) & 1);
        }
        if (code.in_error_span(SignVector(e))) {
            out.push_back(SignVector(base ^ e).str());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SubsystemMask widen(const SubsystemMask &m, size_t total) {
    SubsystemMask w(total);
    for (size_t q = 0; q < m.num_qubits; q++) {
        w.bits.set(q, m.bits.get(q));
    }
    return w;
}

}  // namespace

TEST_CASE("commuting schedule keeps every cut operator distinguishable") {
    DualCode code(sched(3, {"XXI", "ZZX", "YZZ"}));
    SubsystemMask a = SubsystemMask::from_indices(3, {0});

    CHECK(code.codeword(PauliString::from_str("III")).str() == "+++");
    CHECK(code.codeword(PauliString::from_str("XII")).str() == "+--");
    CHECK(code.codeword(PauliString::from_str("YII")).str() == "--+");
    CHECK(code.codeword(PauliString::from_str("ZII")).str() == "-+-");

    for (size_t i = 0; i < 3; i++) {
        CHECK(code.error_vector(i).is_all_plus());
    }
    CHECK(code.error_span_rank() == 0);
    CHECK(code.in_error_span(SignVector::from_str("+++")));
    CHECK(!code.in_error_span(SignVector::from_str("-++")));

    CHECK(code.log2_null_count(a) == 0);
    CHECK(code.recoverable(a));
    CHECK(code.conditional_entropy(a) == -1);

    // Singleton cosets decode uniquely.
    auto dec = code.decode(SignVector::from_str("--+"), a);
    REQUIRE(dec.has_value());
    CHECK(dec->pauli == PauliString::from_str("Y"));
    CHECK(dec->ambiguity_log2 == 0);
}

TEST_CASE("anticommuting schedule aliases a cut operator with identity") {
    DualCode code(sched(3, {"XZI", "ZIX", "IXX"}));
    SubsystemMask a = SubsystemMask::from_indices(3, {0});

    CHECK(code.codeword(PauliString::from_str("XII")).str() == "+-+");
    CHECK(code.codeword(PauliString::from_str("YII")).str() == "--+");
    CHECK(code.codeword(PauliString::from_str("ZII")).str() == "-++");
    CHECK(code.error_vector(0).str() == "+++");
    CHECK(code.error_vector(1).str() == "-++");
    CHECK(code.error_vector(2).str() == "-++");
    CHECK(code.error_span_rank() == 1);

    // The span contains the codeword of Z on the cut, so Z aliases identity.
    std::vector<std::string> in_span;
    for (uint64_t bits = 0; bits < 8; bits++) {
        BitVec e(3);
        for (size_t j = 0; j < 3; j++) {
            e.set(j, (bits >> j) & 1);
        }
        if (code.in_error_span(SignVector(e))) {
            in_span.push_back(SignVector(e).str());
        }
    }
    std::sort(in_span.begin(), in_span.end());
    CHECK(in_span == std::vector<std::string>{"+++", "-++"});

    CHECK(code.log2_null_count(a) == 1);
    CHECK(!code.recoverable(a));
    CHECK(code.conditional_entropy(a) == 0);

    CHECK(coset_strs(code, PauliString::from_str("XII")) ==
          coset_strs(code, PauliString::from_str("YII")));
    CHECK(coset_strs(code, PauliString::from_str("III")) ==
          coset_strs(code, PauliString::from_str("ZII")));

    auto dec = code.decode(SignVector::from_str("+++"), a);
    REQUIRE(dec.has_value());
    CHECK(dec->pauli == PauliString::identity(1));
    CHECK(dec->ambiguity_log2 == 1);
    auto dec_x = code.decode(SignVector::from_str("+-+"), a);
    REQUIRE(dec_x.has_value());
    CHECK(dec_x->pauli == PauliString::from_str("X"));
}

TEST_CASE("rank two disturbance span merges cut cosets") {
    DualCode code(sched(3, {"XIZ", "ZZZ", "YZZ"}));
    SubsystemMask a = SubsystemMask::from_indices(3, {0});

    CHECK(code.codeword(PauliString::from_str("XII")).str() == "+--");
    CHECK(code.codeword(PauliString::from_str("YII")).str() == "--+");
    CHECK(code.codeword(PauliString::from_str("ZII")).str() == "-+-");
    CHECK(code.error_vector(0).str() == "+++");
    CHECK(code.error_vector(1).str() == "-++");
    CHECK(code.error_vector(2).str() == "--+");
    CHECK(code.error_span_rank() == 2);

    CHECK(coset_strs(code, PauliString::identity(3)) ==
          std::vector<std::string>{"+++", "+-+", "-++", "--+"});
    CHECK(coset_strs(code, PauliString::from_str("XII")) ==
          std::vector<std::string>{"++-", "+--", "-+-", "---"});
    CHECK(coset_strs(code, PauliString::from_str("YII")) ==
          coset_strs(code, PauliString::identity(3)));

    CHECK(code.log2_null_count(a) == 1);
    CHECK(!code.recoverable(a));
    CHECK(code.conditional_entropy(a) == 0);
}

TEST_CASE("conditional entropy walks through the two-qubit schedules") {
    SubsystemMask a = SubsystemMask::from_indices(2, {0});
    std::vector<std::vector<std::string>> schedules = {
        {}, {"ZI"}, {"ZZ"}, {"XX", "ZZ"}, {"XZ", "ZZ"}};
    std::vector<int64_t> expected = {1, 0, 0, -1, 0};
    for (size_t k = 0; k < schedules.size(); k++) {
        CAPTURE(k);
        DualCode code(sched(2, schedules[k]));
        CHECK(code.conditional_entropy(a) == expected[k]);
    }

    // Site measurement and pair measurement leave the same conditional
    // entropy but different mutual information.
    CHECK(CodeAnalysis(sched(2, {"ZI"})).entropies(a).i_ab == 0);
    CHECK(CodeAnalysis(sched(2, {"ZZ"})).entropies(a).i_ab == 1);

    DualCode pair(sched(2, {"XX", "ZZ"}));
    CHECK(pair.codeword(PauliString::from_str("XI")).str() == "+-");
    CHECK(pair.codeword(PauliString::from_str("YI")).str() == "--");
    CHECK(pair.codeword(PauliString::from_str("ZI")).str() == "-+");
    CHECK(pair.error_span_rank() == 0);
    CHECK(pair.recoverable(a));
    auto dec_y = pair.decode(SignVector::from_str("--"), a);
    REQUIRE(dec_y.has_value());
    CHECK(dec_y->pauli == PauliString::from_str("Y"));
    CHECK(dec_y->ambiguity_log2 == 0);
    CHECK(CodeAnalysis(sched(2, {"XX", "ZZ"})).entropies(a).i_ab == 2);

    DualCode skew(sched(2, {"XZ", "ZZ"}));
    CHECK(skew.codeword(PauliString::from_str("XI")).str() == "+-");
    CHECK(skew.codeword(PauliString::from_str("ZI")).str() == "-+");
    CHECK(skew.error_vector(1).str() == "-+");
    CHECK(coset_strs(skew, PauliString::from_str("XI")) ==
          std::vector<std::string>{"+-", "--"});
    CHECK(coset_strs(skew, PauliString::from_str("ZI")) ==
          coset_strs(skew, PauliString::identity(2)));
    auto dec_x = skew.decode(SignVector::from_str("+-"), a);
    REQUIRE(dec_x.has_value());
    CHECK(dec_x->pauli == PauliString::from_str("X"));
    CHECK(dec_x->ambiguity_log2 == 1);
    CHECK(skew.decode(SignVector::from_str("--"), a)->pauli == PauliString::from_str("X"));

    // With no measurements the empty sum vector decodes to identity and
    // every cut operator is consistent with it.
    DualCode empty(sched(2, {}));
    auto dec_i = empty.decode(SignVector::all_plus(0), a);
    REQUIRE(dec_i.has_value());
    CHECK(dec_i->pauli == PauliString::identity(1));
    CHECK(dec_i->ambiguity_log2 == 2);
}

TEST_CASE("codeword and disturbance rows satisfy their product identities") {
    Rng rng(0x6f1c02d9a84b57e3ULL);
    for (size_t trial = 0; trial < 60; trial++) {
        size_t n = 1 + rng.next_below(5);
        size_t tau = rng.next_below(9);
        MeasurementSchedule s = random_schedule(rng, n, tau);
        DualCode code(s);

        for (size_t i = 0; i < tau; i++) {
            for (size_t j = 0; j < tau; j++) {
                bool expected = j < i && !s.ops[i].commutes(s.ops[j]);
                CHECK(code.error_rows()[i].get(j) == expected);
                bool expected_rev = j > i && !s.ops[i].commutes(s.ops[j]);
                CHECK(code.reverse_error_rows()[i].get(j) == expected_rev);
                // Transpose pairing between the two disturbance records.
                CHECK(code.error_rows()[i].get(j) == code.reverse_error_rows()[j].get(i));
            }
            // Forward and reverse records multiply to the full codeword.
            CHECK(code.codeword_bits(s.ops[i]) ==
                  (code.error_rows()[i] ^ code.reverse_error_rows()[i]));
        }

        for (size_t q = 0; q < n; q++) {
            CHECK(code.codeword_bits(PauliString::single(n, q, 'X')) == code.codeword_rows()[q]);
            CHECK(code.codeword_bits(PauliString::single(n, q, 'Z')) ==
                  code.codeword_rows()[n + q]);
        }

        PauliString p = random_measurement(rng, n);
        PauliString q = random_measurement(rng, n);
        CHECK(code.codeword_bits(p * q) == (code.codeword_bits(p) ^ code.codeword_bits(q)));

        CHECK(gf2_rank(code.reverse_error_rows()) == static_cast<size_t>(code.error_span_rank()));
    }
}

TEST_CASE("entropy report matches stabilizer simulation") {
    Rng rng(0x2b7e151628aed2a6ULL);
    for (size_t trial = 0; trial < 120; trial++) {
        size_t n = 1 + rng.next_below(5);
        size_t tau = rng.next_below(11);
        MeasurementSchedule s = random_schedule(rng, n, tau);
        CodeAnalysis analysis(s);

        SubsystemMask a(n);
        for (size_t q = 0; q < n; q++) {
            a.bits.set(q, rng.next_bit());
        }
        SubsystemMask b = a.complement();
        EntropyReport rep = analysis.entropies(a);

        StabilizerTableau plain = StabilizerTableau::maximally_mixed(n);
        Rng plain_rng = rng.split(trial);
        plain.run_schedule(s, plain_rng);
        int64_t s_ab = plain.subsystem_entropy(SubsystemMask::full(n));
        int64_t s_b_plain = plain.subsystem_entropy(b);
        CHECK(rep.s_ab == s_ab);
        CHECK(rep.s_a_given_b == s_ab - s_b_plain);
        CHECK(rep.s_a_given_b == analysis.code().conditional_entropy(a));

        StabilizerTableau ref = StabilizerTableau::with_reference(n);
        Rng ref_rng = rng.split(trial + 100000);
        ref.run_schedule(s, ref_rng);
        SubsystemMask wide_a = widen(a, 2 * n);
        SubsystemMask wide_b = widen(b, 2 * n);
        SubsystemMask wide_ab = widen(SubsystemMask::full(n), 2 * n);
        SubsystemMask r_mask = wide_ab.complement();
        SubsystemMask ar_mask = wide_a;
        for (size_t q = n; q < 2 * n; q++) {
            ar_mask.bits.set(q, true);
        }
        CHECK(rep.s_a == ref.subsystem_entropy(wide_a));
        CHECK(rep.s_b == ref.subsystem_entropy(wide_b));
        CHECK(rep.s_r == ref.subsystem_entropy(r_mask));
        CHECK(rep.s_ab == ref.subsystem_entropy(wide_ab));
        CHECK(rep.s_ab_given_r ==
              ref.subsystem_entropy(SubsystemMask::full(2 * n)) - ref.subsystem_entropy(r_mask));
        CHECK(rep.i_ar ==
              rep.s_a + ref.subsystem_entropy(r_mask) - ref.subsystem_entropy(ar_mask));
        CHECK(rep.i_ab == rep.s_a + rep.s_b - rep.s_ab);

        CHECK(rep.i_ab >= 0);
        CHECK(rep.i_ar >= 0);
        CHECK(rep.i_ab + rep.i_ar == 2 * rep.s_a);
        CHECK(rep.s_a + rep.s_b >= rep.s_ab);
        CHECK(rep.s_a_given_b >= -static_cast<int64_t>(a.size()));
        CHECK(rep.s_ab_given_r == -rep.s_ab);
    }
}

TEST_CASE("supported generator counts split across every cut") {
    Rng rng(0x452821e638d01377ULL);
    for (size_t trial = 0; trial < 80; trial++) {
        size_t n = 1 + rng.next_below(5);
        size_t tau = rng.next_below(9);
        CodeAnalysis analysis(random_schedule(rng, n, tau));
        SubsystemMask a(n);
        for (size_t q = 0; q < n; q++) {
            a.bits.set(q, rng.next_bit());
        }
        CleaningReport rep = analysis.cleaning(a);
        CHECK(rep.identities_hold);
        CHECK(rep.g_a >= 0);
        CHECK(rep.g_b >= 0);
        CHECK(rep.g_a + rep.g_b == rep.g);
    }

    // Without measurements every direction is unconstrained.
    CodeAnalysis free(sched(3, {}));
    CHECK(free.cleaning(SubsystemMask::from_indices(3, {0})).g == 6);
    CHECK(free.code_distance_contiguous() == 1);
}

TEST_CASE("contiguous distance finds the shortest unconstrained window") {
    CHECK(CodeAnalysis(sched(3, {"ZZI", "IZZ"})).code_distance_contiguous() == 1);
    CHECK(!CodeAnalysis(sched(4, {"ZIII", "IZII", "IIZI", "IIIZ"}))
               .code_distance_contiguous()
               .has_value());
    CHECK(!CodeAnalysis(sched(2, {"XX", "ZZ"})).code_distance_contiguous().has_value());
    CHECK(CodeAnalysis(sched(3, {"ZII", "XII", "IZI", "IXI"})).code_distance_contiguous() == 1);
}

TEST_CASE("decode returns the least pauli of the matching coset") {
    Rng rng(0xbe5466cf34e90c6cULL);
    for (size_t trial = 0; trial < 80; trial++) {
        size_t n = 1 + rng.next_below(4);
        size_t tau = rng.next_below(7);
        MeasurementSchedule s = random_schedule(rng, n, tau);
        DualCode code(s);

        size_t na = 1 + rng.next_below(n < 2 ? 1 : 2);
        SubsystemMask a(n);
        while (a.size() < na) {
            a.bits.set(rng.next_below(n), true);
        }

        std::vector<PauliString> patterns = all_patterns(na);
        std::vector<BitVec> codewords;
        for (const PauliString &p : patterns) {
            codewords.push_back(code.codeword_bits(embed_on_mask(p, a)));
        }

        for (size_t t = 0; t < patterns.size(); t++) {
            BitVec target = codewords[t];
            for (size_t i = 0; i < tau; i++) {
                if (rng.next_bit()) {
                    target ^= code.error_rows()[i];
                }
            }
            SignVector sv{target};
            auto dec = code.decode(sv, a);
            REQUIRE(dec.has_value());

            std::vector<size_t> matching;
            for (size_t c = 0; c < patterns.size(); c++) {
                if (code.in_error_span(SignVector(codewords[c] ^ target))) {
                    matching.push_back(c);
                }
            }
            REQUIRE(!matching.empty());
            size_t best = matching[0];
            for (size_t c : matching) {
                if (pattern_key(patterns[c]) < pattern_key(patterns[best])) {
                    best = c;
                }
            }
            CHECK(dec->pauli == patterns[best]);
            CHECK((int64_t{1} << dec->ambiguity_log2) ==
                  static_cast<int64_t>(matching.size()));
            CHECK(dec->ambiguity_log2 == code.log2_null_count(a));
        }

        // Arbitrary sign vectors decode exactly when some cut operator matches.
        for (size_t probe = 0; probe < 8; probe++) {
            BitVec target(tau);
            for (size_t j = 0; j < tau; j++) {
                target.set(j, rng.next_bit());
            }
            bool any = false;
            for (const BitVec &cw : codewords) {
                any = any || code.in_error_span(SignVector(cw ^ target));
            }
            CHECK(code.decode(SignVector{target}, a).has_value() == any);
        }
    }
}

TEST_CASE("reverse decode reproduces a measurement subset") {
    DualCode code(sched(2, {"ZI", "IZ", "XX"}));
    auto rd = code.decode_reverse(SignVector::from_str("++-"));
    REQUIRE(rd.has_value());
    CHECK(rd->selector.str() == "100");
    CHECK(rd->op == PauliString::from_str("ZI"));
    CHECK(!code.decode_reverse(SignVector::from_str("+-+")).has_value());

    Rng rng(0xc0ac29b7c97c50ddULL);
    for (size_t trial = 0; trial < 60; trial++) {
        size_t n = 1 + rng.next_below(4);
        size_t tau = 1 + rng.next_below(8);
        MeasurementSchedule s = random_schedule(rng, n, tau);
        DualCode dual(s);

        BitVec target(tau);
        for (size_t i = 0; i < tau; i++) {
            if (rng.next_bit()) {
                target ^= dual.reverse_error_rows()[i];
            }
        }
        SignVector sv{target};
        CHECK(dual.in_reverse_error_span(sv));
        auto dec = dual.decode_reverse(sv);
        REQUIRE(dec.has_value());

        BitVec recombined(tau);
        PauliString product = PauliString::identity(n);
        for (size_t i = 0; i < tau; i++) {
            if (dec->selector.get(i)) {
                recombined ^= dual.reverse_error_rows()[i];
                product = product * s.ops[i];
            }
        }
        CHECK(recombined == target);
        CHECK(dec->op == product);

        BitVec probe(tau);
        for (size_t i = 0; i < tau; i++) {
            probe.set(i, rng.next_bit());
        }
        SignVector pv{probe};
        CHECK(dual.decode_reverse(pv).has_value() == dual.in_reverse_error_span(pv));
    }
}

TEST_CASE("reference extension pairs every qubit and embeds the schedule") {
    ExtendedDualCode ext(sched(2, {"ZI"}));
    const DualCode &code = ext.code();
    REQUIRE(code.tau() == 5);
    REQUIRE(code.num_qubits() == 4);
    CHECK(code.schedule().ops[0] == PauliString::from_str("XIXI"));
    CHECK(code.schedule().ops[1] == PauliString::from_str("ZIZI"));
    CHECK(code.schedule().ops[2] == PauliString::from_str("IXIX"));
    CHECK(code.schedule().ops[3] == PauliString::from_str("IZIZ"));
    CHECK(code.schedule().ops[4] == PauliString::from_str("ZIII"));
    for (size_t i = 0; i < 4; i++) {
        CHECK(code.error_vector(i).is_all_plus());
    }
    CHECK(code.error_vector(4).str() == "-++++");
    CHECK(code.error_span_rank() == 1);

    Rng rng(0x3f84d5b5b5470917ULL);
    for (size_t trial = 0; trial < 40; trial++) {
        size_t n = 1 + rng.next_below(4);
        size_t tau = rng.next_below(7);
        MeasurementSchedule s = random_schedule(rng, n, tau);
        DualCode plain(s);
        ExtendedDualCode extended(s);
        for (size_t i = 0; i < tau; i++) {
            // Pair rows never disturb anything; schedule rows repeat their
            // plain disturbance record in the trailing coordinates.
            BitVec row = extended.code().error_rows()[2 * n + i];
            for (size_t j = 0; j < tau; j++) {
                CHECK(row.get(2 * n + j) == plain.error_rows()[i].get(j));
            }
        }
        for (size_t i = 0; i < 2 * n; i++) {
            CHECK(extended.code().error_vector(i).is_all_plus());
        }
    }
}
