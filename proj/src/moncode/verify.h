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

#ifndef MONCODE_VERIFY_H
#define MONCODE_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

namespace moncode {

// One property of the dual-code machinery checked against an independent
// oracle over random instances. cases counts the individual comparisons
// made; detail describes the first failing instance.
struct CheckResult {
    std::string name;
    bool passed = true;
    uint64_t cases = 0;
    std::string detail;
};

struct VerifyOptions {
    size_t trials = 40;
    size_t n_max = 3;
    size_t tau_max = 5;
    uint64_t seed = 0x5eed;
};

namespace checks {

// Dual-code conditional entropy equals tableau S_AB - S_B for every
// sampled outcome vector, including its outcome independence.
CheckResult conditional_entropy_formula(const VerifyOptions &options);
// I(A,B) = 2 n_A exactly when the cut is recoverable.
CheckResult maximal_entanglement_iff_recoverable(const VerifyOptions &options);
// Sum vector histogram is exactly uniform over the span of disturbance rows
// and cut codewords.
CheckResult sum_vector_uniformity(const VerifyOptions &options);
// Exhaustively averaged pair distillation output is uniform over the null
// pattern group.
CheckResult distilled_average_uniformity(const VerifyOptions &options);
// Exhaustively averaged mirror distillation output is uniform over the
// stabilizer pattern group.
CheckResult mirror_average_uniformity(const VerifyOptions &options);
// Per-run mirror output carries +1 paired correlations for every logical
// direction and none across anticommuting probes.
CheckResult mirror_run_correlations(const VerifyOptions &options);
// Every mirror run has sum vector inside the reverse disturbance span, with
// the selector reconstructing it.
CheckResult reversal_sum_membership(const VerifyOptions &options);
// Recoverable cuts distill a unit-fidelity pair on every run and leave
// exactly 2^-2n_A of the sum-vector mass on the no-feedback coset.
CheckResult recoverable_distillation(const VerifyOptions &options);
// Stabilizer elements act as signed identities determined by the outcomes.
CheckResult stabilizer_sign_determinism(const VerifyOptions &options);
// Group recursion membership coincides with dual-code span membership.
CheckResult logical_recursion_matches_span(const VerifyOptions &options);
// Logical group is the stabilizer commutant; the double commutant closes.
CheckResult commutant_identities(const VerifyOptions &options);
// Cleaning counts match group-intersection dimensions and their identities.
CheckResult cleaning_identities(const VerifyOptions &options);
// Inserting a cut Pauli between the forward and reverse sweeps shifts the
// reverse outcomes by its codeword.
CheckResult insertion_shift_identity(const VerifyOptions &options);
// Summed insertion probability is flat on the shifted disturbance coset.
CheckResult insertion_probability_flatness(const VerifyOptions &options);
// Pair distillation branch probability equals the average of single-system
// insertion probabilities over the cut Pauli group.
CheckResult joint_probability_average(const VerifyOptions &options);
// Every attainable forward outcome vector has the same probability.
CheckResult outcome_distribution_flatness(const VerifyOptions &options);

}  // namespace checks

// Suites: "theorems", "lemmas", "groups", "probability", "all".
std::vector<std::string> verify_suites();
std::vector<CheckResult> run_verify_suite(const std::string &suite, const VerifyOptions &options);

}  // namespace moncode

#endif
