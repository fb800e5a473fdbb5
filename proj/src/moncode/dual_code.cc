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

#include <stdexcept>

namespace moncode {

DualCode::DualCode(MeasurementSchedule schedule) : schedule_(std::move(schedule)) {
    size_t n = schedule_.num_qubits;
    size_t t = schedule_.tau();
    for (const PauliString &op : schedule_.ops) {
        if (!op.is_hermitian()) {
            throw std::invalid_argument("Scheduled operators must be Hermitian.");
        }
    }

    codeword_rows_.assign(2 * n, BitVec(t));
    for (size_t j = 0; j < t; j++) {
        const PauliString &op = schedule_.ops[j];
        for (size_t q = 0; q < n; q++) {
            if (op.z.get(q)) {
                codeword_rows_[q].set(j, true);
            }
            if (op.x.get(q)) {
                codeword_rows_[n + q].set(j, true);
            }
        }
    }

    error_rows_.assign(t, BitVec(t));
    reverse_error_rows_.assign(t, BitVec(t));
    for (size_t i = 0; i < t; i++) {
        for (size_t j = 0; j < i; j++) {
            if (!schedule_.ops[i].commutes(schedule_.ops[j])) {
                error_rows_[i].set(j, true);
                reverse_error_rows_[j].set(i, true);
            }
        }
    }
    error_space_ = Gf2RowSpace(t);
    reverse_error_space_ = Gf2RowSpace(t);
    for (size_t i = 0; i < t; i++) {
        error_space_.insert(error_rows_[i]);
        reverse_error_space_.insert(reverse_error_rows_[i]);
    }
}

BitVec DualCode::codeword_bits(const PauliString &p) const {
    size_t n = num_qubits();
    if (p.num_qubits != n) {
        throw std::invalid_argument("Operator qubit count mismatch.");
    }
    BitVec row(tau());
    for (size_t q = 0; q < n; q++) {
        if (p.x.get(q)) {
            row ^= codeword_rows_[q];
        }
        if (p.z.get(q)) {
            row ^= codeword_rows_[n + q];
        }
    }
    return row;
}

SignVector DualCode::codeword(const PauliString &p) const {
    return SignVector(codeword_bits(p));
}

SignVector DualCode::error_vector(size_t i) const {
    return SignVector(error_rows_.at(i));
}

SignVector DualCode::reverse_error_vector(size_t i) const {
    return SignVector(reverse_error_rows_.at(i));
}

bool DualCode::in_error_span(const SignVector &s) const {
    if (s.len != tau()) {
        throw std::invalid_argument("Sign vector length mismatch.");
    }
    return error_space_.contains(s.bits);
}

bool DualCode::in_reverse_error_span(const SignVector &s) const {
    if (s.len != tau()) {
        throw std::invalid_argument("Sign vector length mismatch.");
    }
    return reverse_error_space_.contains(s.bits);
}

int64_t DualCode::log2_null_count(const SubsystemMask &mask) const {
    size_t n = num_qubits();
    if (mask.num_qubits != n) {
        throw std::invalid_argument("Mask qubit count mismatch.");
    }
    Gf2RowSpace space = error_space_;
    int64_t independent = 0;
    for (size_t q = 0; q < n; q++) {
        if (!mask.bits.get(q)) {
            continue;
        }
        independent += space.insert(codeword_rows_[q]);
        independent += space.insert(codeword_rows_[n + q]);
    }
    return 2 * static_cast<int64_t>(mask.size()) - independent;
}

int64_t DualCode::conditional_entropy(const SubsystemMask &mask) const {
    return log2_null_count(mask) - static_cast<int64_t>(mask.size());
}

std::optional<DecodeResult> DualCode::decode(const SignVector &s,
                                             const SubsystemMask &mask) const {
    size_t n = num_qubits();
    if (s.len != tau()) {
        throw std::invalid_argument("Sign vector length mismatch.");
    }
    if (mask.num_qubits != n) {
        throw std::invalid_argument("Mask qubit count mismatch.");
    }
    std::vector<size_t> idx = mask.indices();
    size_t na = idx.size();

    std::vector<BitVec> rows;
    rows.reserve(2 * na + tau());
    for (size_t k = 0; k < na; k++) {
        rows.push_back(codeword_rows_[idx[k]]);
    }
    for (size_t k = 0; k < na; k++) {
        rows.push_back(codeword_rows_[n + idx[k]]);
    }
    for (const BitVec &row : error_rows_) {
        rows.push_back(row);
    }

    std::optional<BitVec> combo = gf2_solve(rows, s.bits);
    if (!combo) {
        return std::nullopt;
    }

    Gf2RowSpace null_group(2 * na);
    for (const BitVec &kernel : gf2_kernel_basis(rows)) {
        BitVec p(2 * na);
        for (size_t c = 0; c < 2 * na; c++) {
            p.set(c, kernel.get(c));
        }
        null_group.insert(p);
    }
    BitVec picked(2 * na);
    for (size_t c = 0; c < 2 * na; c++) {
        picked.set(c, combo->get(c));
    }
    picked = null_group.reduce(picked);

    DecodeResult result;
    result.pauli = PauliString(na);
    for (size_t k = 0; k < na; k++) {
        result.pauli.x.set(k, picked.get(k));
        result.pauli.z.set(k, picked.get(na + k));
    }
    result.ambiguity_log2 = static_cast<int64_t>(null_group.rank());
    return result;
}

std::optional<ReverseDecodeResult> DualCode::decode_reverse(const SignVector &s) const {
    if (s.len != tau()) {
        throw std::invalid_argument("Sign vector length mismatch.");
    }
    std::optional<BitVec> combo = gf2_solve(reverse_error_rows_, s.bits);
    if (!combo) {
        return std::nullopt;
    }
    ReverseDecodeResult result;
    result.op = PauliString::identity(num_qubits());
    for (size_t j = 0; j < tau(); j++) {
        if (combo->get(j)) {
            result.op = result.op * schedule_.ops[j];
        }
    }
    result.selector = std::move(*combo);
    return result;
}

static MeasurementSchedule extended_schedule(const MeasurementSchedule &schedule) {
    size_t n = schedule.num_qubits;
    MeasurementSchedule ext(2 * n, {});
    for (size_t q = 0; q < n; q++) {
        PauliString xx(2 * n);
        xx.x.set(q, true);
        xx.x.set(n + q, true);
        ext.append(xx);
        PauliString zz(2 * n);
        zz.z.set(q, true);
        zz.z.set(n + q, true);
        ext.append(zz);
    }
    for (const PauliString &op : schedule.ops) {
        ext.append(op.embedded(2 * n, 0));
    }
    return ext;
}

ExtendedDualCode::ExtendedDualCode(const MeasurementSchedule &schedule)
    : system_qubits_(schedule.num_qubits), code_(extended_schedule(schedule)) {
}

int64_t ExtendedDualCode::log2_null_count(const SubsystemMask &mask) const {
    if (mask.num_qubits != system_qubits_) {
        throw std::invalid_argument("Mask qubit count mismatch.");
    }
    SubsystemMask wide(2 * system_qubits_);
    for (size_t q = 0; q < system_qubits_; q++) {
        wide.bits.set(q, mask.bits.get(q));
    }
    return code_.log2_null_count(wide);
}

CodeAnalysis::CodeAnalysis(const MeasurementSchedule &schedule)
    : code_(schedule), extended_(schedule) {
}

EntropyReport CodeAnalysis::entropies(const SubsystemMask &a) const {
    size_t n = num_qubits();
    if (a.num_qubits != n) {
        throw std::invalid_argument("Mask qubit count mismatch.");
    }
    SubsystemMask b = a.complement();
    SubsystemMask full = SubsystemMask::full(n);
    int64_t na = static_cast<int64_t>(a.size());
    int64_t nb = static_cast<int64_t>(b.size());

    EntropyReport r;
    r.s_a = na - extended_.log2_null_count(a);
    r.s_b = nb - extended_.log2_null_count(b);
    r.s_r = static_cast<int64_t>(n) - extended_.log2_null_count(full);
    r.s_ab = code_.log2_null_count(full) - static_cast<int64_t>(n);
    r.s_a_given_b = code_.log2_null_count(a) - na;
    r.s_ab_given_r = static_cast<int64_t>(n) - code_.log2_null_count(full);
    r.i_ab = code_.log2_null_count(full) - code_.log2_null_count(a) - code_.log2_null_count(b);
    r.i_ar = r.s_a + r.s_r - r.s_b;
    return r;
}

int64_t CodeAnalysis::g_of(const SubsystemMask &a) const {
    return code_.log2_null_count(a) - extended_.log2_null_count(a);
}

CleaningReport CodeAnalysis::cleaning(const SubsystemMask &a) const {
    size_t n = num_qubits();
    if (a.num_qubits != n) {
        throw std::invalid_argument("Mask qubit count mismatch.");
    }
    SubsystemMask b = a.complement();
    SubsystemMask full = SubsystemMask::full(n);

    CleaningReport r;
    r.g = g_of(full);
    r.g_a = g_of(a);
    r.g_b = g_of(b);
    int64_t na = static_cast<int64_t>(a.size());
    bool split = r.g_a + r.g_b == r.g;
    bool cleaned = code_.log2_null_count(a) ==
                   2 * na - extended_.log2_null_count(full) + extended_.log2_null_count(b);
    bool pure = code_.log2_null_count(full) + extended_.log2_null_count(full) ==
                2 * static_cast<int64_t>(n);
    r.identities_hold = split && cleaned && pure;
    return r;
}

std::optional<int64_t> CodeAnalysis::code_distance_contiguous() const {
    size_t n = num_qubits();
    for (size_t len = 1; len <= n; len++) {
        for (size_t start = 0; start + len <= n; start++) {
            if (g_of(SubsystemMask::contiguous(n, start, len)) > 0) {
                return static_cast<int64_t>(len);
            }
        }
    }
    return std::nullopt;
}

}  // namespace moncode
