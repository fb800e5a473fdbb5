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

#include "moncode/pauli_string.h"

#include "dense_oracle.h"
#include "doctest.h"
#include "moncode/rng.h"
#include "moncode/sign_vector.h"

using namespace moncode;

namespace {

PauliString random_pauli(size_t n, Rng &rng, bool allow_sign = true) {
    PauliString p(n);
    for (size_t q = 0; q < n; q++) {
        p.x.set(q, rng.next_bit());
        p.z.set(q, rng.next_bit());
    }
    if (allow_sign && rng.next_bit()) {
        p.phase = 2;
    }
    return p;
}

}  // namespace

TEST_CASE("pauli parsing and formatting round trip") {
    for (const char *text : {"+XIZ", "-YY", "+IIII", "-iZX", "iX", "+Y"}) {
        PauliString p = PauliString::from_str(text);
        std::string expect = text;
        if (expect[0] != '+' && expect[0] != '-' && expect[0] != 'i') {
            expect = "+" + expect;
        }
        CHECK(p.str() == expect);
    }
    CHECK(PauliString::from_str("XZ").str() == "+XZ");
    CHECK(PauliString::from_str("X_Z").str() == "+XIZ");
    CHECK_THROWS_AS(PauliString::from_str("+XQ"), std::invalid_argument);
}

TEST_CASE("hermitian phases and signs") {
    CHECK(PauliString::from_str("+Y").is_hermitian());
    CHECK(PauliString::from_str("-Y").sign() == -1);
    CHECK(PauliString::from_str("iX").is_hermitian() == false);
    CHECK_THROWS_AS(PauliString::from_str("iX").sign(), std::logic_error);
}

TEST_CASE("product of ZZ and XX") {
    // By hand: (Z x Z)(X x X) = (ZX) x (ZX) = (iY) x (iY) = -(Y x Y).
    PauliString zz = PauliString::from_str("+ZZ");
    PauliString xx = PauliString::from_str("+XX");
    CHECK(zz.commutes(xx));
    PauliString prod = zz * xx;
    CHECK(prod.str() == "-YY");

    // Independent dense-matrix confirmation.
    auto lhs = oracle::mat_mul(oracle::pauli_matrix(zz), oracle::pauli_matrix(xx));
    CHECK(oracle::approx_equal(lhs, oracle::pauli_matrix(prod)));
}

TEST_CASE("single-qubit product phases") {
    // Z * X = iY.
    PauliString p = PauliString::from_str("+Z") * PauliString::from_str("+X");
    CHECK(p.phase == 1);
    CHECK(p.pauli_char_at(0) == 'Y');
    // X * Z = -iY.
    p = PauliString::from_str("+X") * PauliString::from_str("+Z");
    CHECK(p.phase == 3);
}

TEST_CASE("products match the dense matrix oracle on random pairs") {
    Rng rng(0x70a1);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + rng.next_below(3);
        PauliString a = random_pauli(n, rng);
        PauliString b = random_pauli(n, rng);
        PauliString prod = a * b;
        auto expected = oracle::mat_mul(oracle::pauli_matrix(a), oracle::pauli_matrix(b));
        CHECK(oracle::approx_equal(expected, oracle::pauli_matrix(prod)));
        // Commutation agrees with the matrices too.
        auto ab = expected;
        auto ba = oracle::mat_mul(oracle::pauli_matrix(b), oracle::pauli_matrix(a));
        CHECK(a.commutes(b) == oracle::approx_equal(ab, ba));
    }
}

TEST_CASE("conjugate flips sign exactly for odd Y counts") {
    CHECK(PauliString::from_str("+Y").conjugate().str() == "-Y");
    CHECK(PauliString::from_str("+YY").conjugate().str() == "+YY");
    CHECK(PauliString::from_str("-XYZ").conjugate().str() == "+XYZ");
    CHECK(PauliString::from_str("+XZ").conjugate().str() == "+XZ");
    Rng rng(0xc0c0);
    for (int trial = 0; trial < 100; trial++) {
        PauliString p = random_pauli(1 + rng.next_below(3), rng);
        // Entrywise complex conjugation of the dense matrix.
        auto m = oracle::pauli_matrix(p);
        for (auto &row : m) {
            for (auto &v : row) {
                v = std::conj(v);
            }
        }
        CHECK(oracle::approx_equal(m, oracle::pauli_matrix(p.conjugate())));
    }
}

TEST_CASE("support, restriction, embedding") {
    PauliString p = PauliString::from_str("+XIZ");
    auto mask = SubsystemMask::from_indices(3, {0, 2});
    CHECK(p.is_supported_on(mask));
    CHECK(!p.is_supported_on(SubsystemMask::from_indices(3, {0, 1})));
    CHECK(p.restricted_to(mask).str() == "+XZ");
    CHECK(PauliString::from_str("-XZ").embedded(4, 1).str() == "-IXZI");
    CHECK(PauliString::from_str("+XZ").embedded(4, 1).restricted_to(
              SubsystemMask::from_indices(4, {1, 2})) == PauliString::from_str("+XZ"));
}

TEST_CASE("sign vector semantics") {
    SignVector v = SignVector::from_str("+-+");
    CHECK(v.len == 3);
    CHECK(v.sign_at(0) == +1);
    CHECK(v.sign_at(1) == -1);
    CHECK((v * v).is_all_plus());
    CHECK(SignVector::from_str("(+1,-1,+1)") == v);
    CHECK(v.str() == "+-+");
    // Bit convention: b = (1 - m) / 2.
    CHECK(v.bits.get(1) == true);
    CHECK(v.bits.get(0) == false);
    SignVector w = SignVector::all_plus(3);
    w.set_sign(2, -1);
    CHECK((v * w).str() == "+--");
}

TEST_CASE("masks") {
    auto m = SubsystemMask::from_indices(5, {1, 3});
    CHECK(m.size() == 2);
    CHECK(m.complement().indices() == std::vector<size_t>{0, 2, 4});
    CHECK(SubsystemMask::contiguous(5, 1, 3).indices() == std::vector<size_t>{1, 2, 3});
    CHECK(SubsystemMask::full(3).size() == 3);
    CHECK_THROWS_AS(SubsystemMask::from_indices(2, {2}), std::out_of_range);
}
