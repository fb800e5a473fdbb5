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

#include <string>
#include <vector>

#include "doctest.h"
#include "moncode/dual_code.h"
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

PauliGroupGens group_of(size_t n, const std::vector<std::string> &gens) {
    PauliGroupGens g(n);
    for (const std::string &text : gens) {
        g.insert_if_independent(PauliString::from_str(text));
    }
    return g;
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

SignVector outcome_bits(uint64_t bits, size_t len) {
    SignVector m(len);
    for (size_t j = 0; j < len; j++) {
        m.set_sign(j, (bits >> j) & 1 ? -1 : +1);
    }
    return m;
}

}  // namespace

TEST_CASE("site measurements accumulate and pin every site") {
    MeasurementSchedule s = sched(3, {"ZII", "IZI", "IIZ"});
    std::vector<PauliGroupGens> stab = stabilizer_steps(s);
    REQUIRE(stab.size() == 4);
    CHECK(stab[0].rank() == 0);
    CHECK(stab[1].same_group(group_of(3, {"ZII"})));
    CHECK(stab[2].same_group(group_of(3, {"ZII", "IZI"})));
    CHECK(stab[3].same_group(group_of(3, {"ZII", "IZI", "IIZ"})));

    std::vector<PauliGroupGens> logic = logical_steps(s);
    CHECK(logic[0].rank() == 6);
    CHECK(logic[1].rank() == 5);
    CHECK(logic[2].rank() == 4);
    CHECK(logic[3].rank() == 3);
    CHECK(logic[3].same_group(stab[3]));
    CHECK(logical_qubit_count(logic[3], stab[3]) == 0);
    CHECK(logical_pairs(logic[3], stab[3]).empty());

    for (uint64_t bits = 0; bits < 8; bits++) {
        SignVector m = outcome_bits(bits, 3);
        CHECK(signed_eigenvalue(s, m, PauliString::from_str("ZII")) == m.sign_at(0));
        CHECK(signed_eigenvalue(s, m, PauliString::from_str("IZI")) == m.sign_at(1));
        CHECK(signed_eigenvalue(s, m, PauliString::from_str("IIZ")) == m.sign_at(2));
        CHECK(signed_eigenvalue(s, m, PauliString::from_str("ZZI")) ==
              m.sign_at(0) * m.sign_at(1));
        CHECK_THROWS_AS(signed_eigenvalue(s, m, PauliString::from_str("XII")),
                        std::invalid_argument);
    }
}

TEST_CASE("remeasuring a site overwrites its earlier constraint") {
    MeasurementSchedule s = sched(3, {"ZII", "XII", "IZI", "IXI"});
    std::vector<PauliGroupGens> stab = stabilizer_steps(s);
    CHECK(stab[1].same_group(group_of(3, {"ZII"})));
    CHECK(stab[2].same_group(group_of(3, {"XII"})));
    CHECK(stab[3].same_group(group_of(3, {"XII", "IZI"})));
    CHECK(stab[4].same_group(group_of(3, {"XII", "IXI"})));

    std::vector<PauliGroupGens> logic = logical_steps(s);
    CHECK(logic[1].rank() == 5);
    CHECK(logic[2].rank() == 5);
    CHECK(logic[3].rank() == 4);
    CHECK(logic[4].same_group(group_of(3, {"XII", "IXI", "IIX", "IIZ"})));

    CHECK(logical_qubit_count(logic[4], stab[4]) == 1);
    auto pairs = logical_pairs(logic[4], stab[4]);
    REQUIRE(pairs.size() == 1);
    CHECK(!pairs[0].first.commutes(pairs[0].second));
    CHECK(logic[4].contains(pairs[0].first));
    CHECK(logic[4].contains(pairs[0].second));
    CHECK(!stab[4].contains(pairs[0].first));
    CHECK(!stab[4].contains(pairs[0].second));

    for (uint64_t bits = 0; bits < 16; bits++) {
        SignVector m = outcome_bits(bits, 4);
        CHECK(signed_eigenvalue(s, m, PauliString::from_str("XII")) == m.sign_at(1));
        CHECK(signed_eigenvalue(s, m, PauliString::from_str("IXI")) == m.sign_at(3));
        CHECK_THROWS_AS(signed_eigenvalue(s, m, PauliString::from_str("ZII")),
                        std::invalid_argument);
    }
}

TEST_CASE("a pair measurement rebuilds site constraints into joint ones") {
    MeasurementSchedule s = sched(2, {"ZI", "IZ", "XX"});
    std::vector<PauliGroupGens> stab = stabilizer_steps(s);
    CHECK(stab[1].same_group(group_of(2, {"ZI"})));
    CHECK(stab[2].same_group(group_of(2, {"ZI", "IZ"})));
    CHECK(stab[3].same_group(group_of(2, {"ZZ", "XX"})));

    PauliGroupGens logic = logical_group(s);
    CHECK(logic.same_group(stab[3]));
    CHECK(logical_qubit_count(logic, stab[3]) == 0);
    CHECK(logical_pairs(logic, stab[3]).empty());

    for (uint64_t bits = 0; bits < 8; bits++) {
        SignVector m = outcome_bits(bits, 3);
        CHECK(signed_eigenvalue(s, m, PauliString::from_str("ZZ")) ==
              m.sign_at(0) * m.sign_at(1));
        CHECK(signed_eigenvalue(s, m, PauliString::from_str("XX")) == m.sign_at(2));
        CHECK_THROWS_AS(signed_eigenvalue(s, m, PauliString::from_str("ZI")),
                        std::invalid_argument);
    }
}

TEST_CASE("without measurements every direction stays logical") {
    MeasurementSchedule s = sched(3, {});
    PauliGroupGens stab = stabilizer_group(s);
    PauliGroupGens logic = logical_group(s);
    CHECK(stab.rank() == 0);
    CHECK(logic.rank() == 6);
    CHECK(logical_qubit_count(logic, stab) == 3);
    auto pairs = logical_pairs(logic, stab);
    REQUIRE(pairs.size() == 3);
    for (size_t q = 0; q < 3; q++) {
        CHECK(pairs[q].first == PauliString::single(3, q, 'X'));
        CHECK(pairs[q].second == PauliString::single(3, q, 'Z'));
    }
}

TEST_CASE("group recursion matches simulated generators") {
    Rng rng(0xd1310ba698dfb5acULL);
    for (size_t trial = 0; trial < 80; trial++) {
        size_t n = 1 + rng.next_below(4);
        size_t tau = rng.next_below(9);
        MeasurementSchedule s = random_schedule(rng, n, tau);
        std::vector<PauliGroupGens> stab = stabilizer_steps(s);
        std::vector<PauliGroupGens> logic = logical_steps(s);
        REQUIRE(stab.size() == tau + 1);
        REQUIRE(logic.size() == tau + 1);

        StabilizerTableau state = StabilizerTableau::maximally_mixed(n);
        Rng run_rng = rng.split(trial);
        state.run_schedule(s, run_rng);
        PauliGroupGens simulated(n);
        for (const PauliString &g : state.generators()) {
            CHECK(simulated.insert_if_independent(g));
        }
        CHECK(simulated.same_group(stab.back()));

        for (size_t t = 0; t < tau; t++) {
            CHECK(stab[t + 1].contains(s.ops[t]));
            for (const PauliString &g : stab[t + 1].generators()) {
                for (const PauliString &h : stab[t + 1].generators()) {
                    CHECK(g.commutes(h));
                }
            }
            CHECK(logic[t + 1].contains_all(stab[t + 1]));
            CHECK((logic[t + 1].rank() - stab[t + 1].rank()) % 2 == 0);
        }
    }
}

TEST_CASE("the logical group is the commutant of the stabilizer group") {
    Rng rng(0x2ffd72dbd01adfb7ULL);
    for (size_t trial = 0; trial < 60; trial++) {
        size_t n = 1 + rng.next_below(4);
        size_t tau = rng.next_below(9);
        MeasurementSchedule s = random_schedule(rng, n, tau);
        PauliGroupGens stab = stabilizer_group(s);
        PauliGroupGens logic = logical_group(s);

        PauliGroupGens comm = stab.commutant();
        CHECK(comm.rank() == 2 * n - stab.rank());
        CHECK(logic.same_group(comm));
        CHECK(comm.commutant().same_group(stab));
    }
}

TEST_CASE("group membership matches the dual code spans") {
    Rng rng(0xb8e1afed6a267e96ULL);
    for (size_t trial = 0; trial < 30; trial++) {
        size_t n = 1 + rng.next_below(3);
        size_t tau = rng.next_below(7);
        MeasurementSchedule s = random_schedule(rng, n, tau);
        PauliGroupGens stab = stabilizer_group(s);
        PauliGroupGens logic = logical_group(s);
        CodeAnalysis analysis(s);
        const DualCode &code = analysis.code();
        const DualCode &ext = analysis.extended().code();

        SubsystemMask mask(n);
        for (size_t q = 0; q < n; q++) {
            mask.bits.set(q, rng.next_bit());
        }

        int64_t logical_on_mask = 0;
        int64_t stabilizer_on_mask = 0;
        for (uint64_t word = 0; word < (uint64_t{1} << (2 * n)); word++) {
            PauliString p(n);
            for (size_t q = 0; q < n; q++) {
                p.x.set(q, (word >> (2 * q)) & 1);
                p.z.set(q, (word >> (2 * q + 1)) & 1);
            }
            bool in_logic = logic.contains(p);
            bool in_stab = stab.contains(p);
            CHECK(in_logic == code.in_error_span(code.codeword(p)));
            CHECK(in_stab == ext.in_error_span(ext.codeword(p.embedded(2 * n, 0))));
            if (p.is_supported_on(mask)) {
                logical_on_mask += in_logic;
                stabilizer_on_mask += in_stab;
            }
        }
        CHECK(logical_on_mask == int64_t{1} << code.log2_null_count(mask));
        CHECK(stabilizer_on_mask ==
              int64_t{1} << analysis.extended().log2_null_count(mask));
        CHECK(analysis.g_of(mask) ==
              code.log2_null_count(mask) - analysis.extended().log2_null_count(mask));
    }
}

TEST_CASE("logical pairs satisfy the pairing structure") {
    Rng rng(0x3b8f48986b4bb9afULL);
    for (size_t trial = 0; trial < 60; trial++) {
        size_t n = 1 + rng.next_below(4);
        size_t tau = rng.next_below(2 * n);
        MeasurementSchedule s = random_schedule(rng, n, tau);
        PauliGroupGens stab = stabilizer_group(s);
        PauliGroupGens logic = logical_group(s);

        auto pairs = logical_pairs(logic, stab);
        CHECK(static_cast<int64_t>(pairs.size()) == logical_qubit_count(logic, stab));

        PauliGroupGens rebuilt = stab;
        for (size_t i = 0; i < pairs.size(); i++) {
            CHECK(!pairs[i].first.commutes(pairs[i].second));
            for (size_t j = 0; j < pairs.size(); j++) {
                if (j != i) {
                    CHECK(pairs[i].first.commutes(pairs[j].first));
                    CHECK(pairs[i].first.commutes(pairs[j].second));
                }
            }
            for (const PauliString &g : stab.generators()) {
                CHECK(pairs[i].first.commutes(g));
                CHECK(pairs[i].second.commutes(g));
            }
            CHECK(logic.contains(pairs[i].first));
            CHECK(logic.contains(pairs[i].second));
            CHECK(rebuilt.insert_if_independent(pairs[i].first));
            CHECK(rebuilt.insert_if_independent(pairs[i].second));
        }
        CHECK(rebuilt.same_group(logic));
    }
}

TEST_CASE("signed eigenvalues agree between sampled and forced runs") {
    Rng rng(0x728eb658718bcd58ULL);
    for (size_t trial = 0; trial < 60; trial++) {
        size_t n = 1 + rng.next_below(4);
        size_t tau = 1 + rng.next_below(8);
        MeasurementSchedule s = random_schedule(rng, n, tau);

        StabilizerTableau state = StabilizerTableau::maximally_mixed(n);
        Rng run_rng = rng.split(trial);
        SignVector m = state.run_schedule(s, run_rng);

        PauliGroupGens stab = stabilizer_group(s);
        const auto &gens = stab.generators();
        for (const PauliString &g : gens) {
            CHECK(signed_eigenvalue(s, m, g) == state.expectation(g));
        }
        if (gens.size() >= 2) {
            CHECK(signed_eigenvalue(s, m, gens[0] * gens[1]) ==
                  signed_eigenvalue(s, m, gens[0]) * signed_eigenvalue(s, m, gens[1]));
        }

        PauliGroupGens logic = logical_group(s);
        auto pairs = logical_pairs(logic, stab);
        if (!pairs.empty()) {
            CHECK_THROWS_AS(signed_eigenvalue(s, m, pairs[0].first), std::invalid_argument);
        }
    }
}
