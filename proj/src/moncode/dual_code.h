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

#ifndef MONCODE_DUAL_CODE_H
#define MONCODE_DUAL_CODE_H

#include <cstdint>
#include <optional>

#include "moncode/gf2.h"
#include "moncode/schedule.h"
#include "moncode/sign_vector.h"

namespace moncode {

// Feedback operator recovered from a sum vector.
struct DecodeResult {
    // Acts on mask.size() qubits; qubit k is the k-th lowest mask index. The
    // lexicographically least representative of the matching coset, ordering
    // candidates by their (x, z) bit rows.
    PauliString pauli;
    // log2 of the number of mask Paulis consistent with the same sum vector.
    int64_t ambiguity_log2 = 0;
};

// Measurement subset reproducing a sum vector of reverse error vectors.
struct ReverseDecodeResult {
    // selector bit j picks the j-th scheduled operator.
    BitVec selector;
    // Product of the selected operators in schedule order. The phase may be
    // imaginary when selected operators anticommute; use the (x, z) pattern.
    PauliString op;
};

// Classical linear code dual to a measurement schedule.
//
// A Pauli operator maps to the codeword vector of its commutation signs with
// the scheduled operators. Each measured operator also contributes an error
// vector recording how it disturbs earlier measurements. Sign vectors are
// stored over GF(2) with bit 1 standing for -1, so componentwise products
// become XOR and spans become row spaces.
class DualCode {
public:
    explicit DualCode(MeasurementSchedule schedule);

    const MeasurementSchedule &schedule() const {
        return schedule_;
    }
    size_t num_qubits() const {
        return schedule_.num_qubits;
    }
    size_t tau() const {
        return schedule_.tau();
    }

    // Commutation signs of p against every scheduled operator.
    SignVector codeword(const PauliString &p) const;
    BitVec codeword_bits(const PauliString &p) const;
    // Row q is the codeword of X_q, row num_qubits + q the codeword of Z_q.
    const std::vector<BitVec> &codeword_rows() const {
        return codeword_rows_;
    }

    // Commutation signs of the i-th operator (0-based) against strictly
    // earlier operators, +1 from position i onward.
    SignVector error_vector(size_t i) const;
    // Mirror: signs against strictly later operators, +1 up to position i.
    SignVector reverse_error_vector(size_t i) const;
    const std::vector<BitVec> &error_rows() const {
        return error_rows_;
    }
    const std::vector<BitVec> &reverse_error_rows() const {
        return reverse_error_rows_;
    }

    bool in_error_span(const SignVector &s) const;
    bool in_reverse_error_span(const SignVector &s) const;
    int64_t error_span_rank() const {
        return static_cast<int64_t>(error_space_.rank());
    }

    // log2 of the number of mask Paulis whose codeword lies in the error
    // span. Zero means distinct mask Paulis stay distinguishable.
    int64_t log2_null_count(const SubsystemMask &mask) const;
    bool recoverable(const SubsystemMask &mask) const {
        return log2_null_count(mask) == 0;
    }
    // log2_null_count(mask) - |mask|, in [-|mask|, |mask|].
    int64_t conditional_entropy(const SubsystemMask &mask) const;

    // Finds the mask Paulis whose codeword coset contains s; nullopt when s
    // is outside every coset.
    std::optional<DecodeResult> decode(const SignVector &s, const SubsystemMask &mask) const;
    // Expresses s as a product of reverse error vectors; nullopt when s is
    // outside their span.
    std::optional<ReverseDecodeResult> decode_reverse(const SignVector &s) const;

private:
    MeasurementSchedule schedule_;
    std::vector<BitVec> codeword_rows_;
    std::vector<BitVec> error_rows_;
    std::vector<BitVec> reverse_error_rows_;
    Gf2RowSpace error_space_;
    Gf2RowSpace reverse_error_space_;
};

// Dual code of the schedule augmented with a reference: system qubit q is
// Bell-paired with reference qubit n + q, the 2n pair operators are prepended
// as measurements, and the scheduled operators act on the first n qubits.
class ExtendedDualCode {
public:
    explicit ExtendedDualCode(const MeasurementSchedule &schedule);

    const DualCode &code() const {
        return code_;
    }
    size_t system_qubits() const {
        return system_qubits_;
    }

    // Null count of a subsystem of the system half; mask indices are system
    // qubit indices.
    int64_t log2_null_count(const SubsystemMask &mask) const;

private:
    size_t system_qubits_;
    DualCode code_;
};

// Entropies of the schedule output run on the maximally mixed state, with R
// the reference purifying that input. All values are in bits and exact.
struct EntropyReport {
    int64_t s_a = 0;
    int64_t s_b = 0;
    int64_t s_r = 0;
    int64_t s_ab = 0;
    int64_t s_a_given_b = 0;
    int64_t s_ab_given_r = 0;
    int64_t i_ab = 0;
    int64_t i_ar = 0;
};

// Generator counts of the subgroups supported on a cut and its complement.
struct CleaningReport {
    int64_t g = 0;
    int64_t g_a = 0;
    int64_t g_b = 0;
    bool identities_hold = false;
};

// Bundles the plain and reference-extended codes of one schedule.
class CodeAnalysis {
public:
    explicit CodeAnalysis(const MeasurementSchedule &schedule);

    const DualCode &code() const {
        return code_;
    }
    const ExtendedDualCode &extended() const {
        return extended_;
    }
    size_t num_qubits() const {
        return code_.num_qubits();
    }

    // a indexes system qubits; B is its complement.
    EntropyReport entropies(const SubsystemMask &a) const;
    CleaningReport cleaning(const SubsystemMask &a) const;

    // Independent generator count of the group elements supported on a.
    int64_t g_of(const SubsystemMask &a) const;
    // Shortest contiguous window supporting a nontrivial group element;
    // nullopt when no window does.
    std::optional<int64_t> code_distance_contiguous() const;

private:
    DualCode code_;
    ExtendedDualCode extended_;
};

}  // namespace moncode

#endif
