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

#ifndef MONCODE_EXPERIMENTS_H
#define MONCODE_EXPERIMENTS_H

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "moncode/distill.h"
#include "moncode/dual_code.h"
#include "moncode/groups.h"
#include "moncode/tableau.h"

namespace moncode {

// One-dimensional brickwork circuit of uniform two-qubit Cliffords with
// Bernoulli(p) single-site Z measurements after every layer. The seed fixes
// gates and measurement sites; outcome randomness is supplied at run time.
struct CircuitSpec {
    size_t n = 0;
    size_t depth = 1;
    double p = 0.0;
    bool periodic = true;
    uint64_t seed = 0;

    uint64_t hash() const;
};

struct GateEvent {
    size_t a = 0;
    size_t b = 0;
    TwoQubitClifford gate;
};

struct CircuitLayer {
    std::vector<GateEvent> gates;
    std::vector<size_t> measured_sites;
};

// Layers plus the equivalent pure measurement sequence: each measured Z is
// conjugated through the strictly later layers, so running the schedule on a
// maximally mixed start reproduces the interleaved run branch by branch.
struct GeneratedCircuit {
    size_t n;
    std::vector<CircuitLayer> layers;
    MeasurementSchedule schedule;
    CliffordMap total_map;

    explicit GeneratedCircuit(size_t n)
        : n(n), schedule(n, {}), total_map(CliffordMap::identity(n)) {
    }
};

// Odd-n periodic layers degenerate to open boundaries (no free endpoint
// pair exists once the bulk is tiled).
GeneratedCircuit gen_random_monitored_circuit(const CircuitSpec &spec);

// Applies the layers directly to t (gates, then Z measurements of the
// layer's sites in ascending order) with the circuit occupying qubits
// offset..offset+n-1. Returns outcomes in schedule order. after_layer, when
// set, observes the state after each layer's measurements.
SignVector run_interleaved(
    const GeneratedCircuit &circuit, StabilizerTableau &t, Rng &rng, size_t offset = 0,
    const std::function<void(size_t layer, const StabilizerTableau &)> &after_layer = {});

struct SweepRecord {
    size_t n = 0;
    double p = 0.0;
    size_t sample = 0;
    uint64_t seed = 0;
    uint64_t spec_hash = 0;
    double s_half = 0.0;
};

struct SweepResult {
    std::vector<SweepRecord> records;
};

// Half-chain entropy of the purified system (system qubits 0..n/2-1 of a
// reference-extended run), averaged over the final max(1, n/4) layers.
double steady_half_chain_entropy(const CircuitSpec &spec);

// depth == 0 selects the default 2n. Every record regenerates from its own
// seed together with the printed (n, p, depth) parameters. Records are
// seeded up front, so the result is identical for any thread count.
SweepResult sweep_measurement_rate(const std::vector<size_t> &ns, const std::vector<double> &ps,
                                   size_t depth, size_t samples, uint64_t seed,
                                   size_t threads = 1);

struct DecouplingPoint {
    size_t len = 0;
    int64_t i_ar = 0;
    int64_t g_a = 0;
};

// Dual-code observables of one generated circuit over the anchored windows
// [0, len). onset is the smallest len with g_a > 0.
struct DecouplingProfile {
    std::vector<DecouplingPoint> points;
    std::optional<int64_t> onset;
    std::optional<int64_t> contiguous_distance;
};

DecouplingProfile decoupling_profile(const CircuitSpec &spec);

// I(A,R) for every single-site A, in site order.
std::vector<int64_t> single_site_i_ar(const CodeAnalysis &analysis);

// Compares the maximally mixed start against a product |0..0> start realized
// by prepending plain Z measurements on every site, on the same circuit.
struct StateIndependenceReport {
    int64_t s_a_given_b_mixed = 0;
    int64_t s_a_given_b_zero = 0;
    int64_t ambiguity_mixed = 0;
    int64_t ambiguity_zero = 0;
    Dyadic fidelity_mixed;
    Dyadic fidelity_zero;
    bool conditional_entropy_equal = false;
    bool fidelity_equal = false;
};

StateIndependenceReport state_independence_check(const CircuitSpec &spec, const SubsystemMask &a,
                                                 uint64_t run_seed);

// Uniformly random maximal isotropic subgroup of the n-qubit Pauli pattern
// group, grown one uniform commutant coset element at a time.
PauliGroupGens random_maximal_isotropic(size_t n, Rng &rng);

struct PuritySwapReport {
    double sample_mean = 0.0;
    double rhs = 0.0;
    double std_error = 0.0;
    size_t samples = 0;
};

// Projects the reference block of a purified circuit run onto random
// stabilizer states (uniform basis choice, Born outcome) and averages the
// importance-weighted purity d_R * p(z) * 2^-S_A, whose expectation equals
// d_R/(d_R+1) * (2^-S_A + 2^-S_B) of the unprojected state exactly.
PuritySwapReport purity_swap_check(const CircuitSpec &spec, const SubsystemMask &a, size_t samples,
                                   uint64_t seed);

struct SubleadingFit {
    double a = 0.0;
    double b = 0.0;
    double gamma = 0.0;
    double c = 0.0;
    double rss = 0.0;
    std::vector<double> residuals;
};

// Least squares for s = a*l + b*l^gamma + c*log2(l) with gamma in (0,1):
// linear solve per gamma on a grid, then local refinement. Requires at least
// 6 distinct l values.
SubleadingFit subleading_fit(const std::vector<double> &l, const std::vector<double> &s);

// Log-log regression slope for y ~ x^exponent; needs two distinct positive
// points.
double power_law_exponent(const std::vector<double> &x, const std::vector<double> &y);

}  // namespace moncode

#endif
