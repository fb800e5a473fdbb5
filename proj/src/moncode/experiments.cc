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

#include "moncode/experiments.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <thread>

namespace moncode {

namespace {

uint64_t fnv1a(uint64_t h, uint64_t value) {
    for (size_t byte = 0; byte < 8; byte++) {
        h ^= (value >> (8 * byte)) & 0xff;
        h *= 0x100000001b3ULL;
    }
    return h;
}

double unit_double(Rng &rng) {
    return static_cast<double>(rng.next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace

uint64_t CircuitSpec::hash() const {
    uint64_t h = 0xcbf29ce484222325ULL;
    h = fnv1a(h, n);
    h = fnv1a(h, depth);
    uint64_t p_bits;
    static_assert(sizeof(p_bits) == sizeof(p));
    std::memcpy(&p_bits, &p, sizeof(p_bits));
    h = fnv1a(h, p_bits);
    h = fnv1a(h, periodic ? 1 : 0);
    h = fnv1a(h, seed);
    return h;
}

GeneratedCircuit gen_random_monitored_circuit(const CircuitSpec &spec) {
    if (spec.n == 0 || spec.depth == 0 || spec.p < 0.0 || spec.p > 1.0) {
        throw std::invalid_argument("Circuit spec needs n >= 1, depth >= 1, 0 <= p <= 1.");
    }
    Rng gate_rng = Rng(spec.seed).split(0);
    Rng site_rng = Rng(spec.seed).split(1);

    GeneratedCircuit out(spec.n);
    out.layers.resize(spec.depth);
    for (size_t t = 0; t < spec.depth; t++) {
        CircuitLayer &layer = out.layers[t];
        std::vector<bool> used(spec.n, false);
        for (size_t q = t % 2; q + 1 < spec.n; q += 2) {
            layer.gates.push_back({q, q + 1, TwoQubitClifford::random(gate_rng)});
            used[q] = used[q + 1] = true;
        }
        if (spec.periodic && spec.n >= 2 && !used[spec.n - 1] && !used[0]) {
            layer.gates.push_back({spec.n - 1, 0, TwoQubitClifford::random(gate_rng)});
        }
        for (size_t q = 0; q < spec.n; q++) {
            if (unit_double(site_rng) < spec.p) {
                layer.measured_sites.push_back(q);
            }
        }
    }

    CliffordMap suffix = CliffordMap::identity(spec.n);
    std::vector<std::vector<PauliString>> evolved(spec.depth);
    for (size_t t = spec.depth; t-- > 0;) {
        for (size_t q : out.layers[t].measured_sites) {
            evolved[t].push_back(suffix.image_of_z(q));
        }
        for (const GateEvent &event : out.layers[t].gates) {
            suffix.pre_two_qubit(event.a, event.b, event.gate);
        }
    }
    for (size_t t = 0; t < spec.depth; t++) {
        for (PauliString &op : evolved[t]) {
            out.schedule.append(std::move(op));
        }
    }
    out.total_map = std::move(suffix);
    return out;
}

SignVector run_interleaved(
    const GeneratedCircuit &circuit, StabilizerTableau &t, Rng &rng, size_t offset,
    const std::function<void(size_t layer, const StabilizerTableau &)> &after_layer) {
    SignVector outcomes(circuit.schedule.ops.size());
    size_t slot = 0;
    for (size_t layer = 0; layer < circuit.layers.size(); layer++) {
        for (const GateEvent &event : circuit.layers[layer].gates) {
            t.apply_two_qubit(offset + event.a, offset + event.b, event.gate);
        }
        for (size_t q : circuit.layers[layer].measured_sites) {
            PauliString z = PauliString::single(t.num_qubits(), offset + q, 'Z');
            outcomes.set_sign(slot++, t.measure(z, rng).outcome);
        }
        if (after_layer) {
            after_layer(layer, t);
        }
    }
    return outcomes;
}

double steady_half_chain_entropy(const CircuitSpec &spec) {
    GeneratedCircuit circuit = gen_random_monitored_circuit(spec);
    StabilizerTableau state = StabilizerTableau::with_reference(spec.n);
    SubsystemMask half(2 * spec.n);
    for (size_t q = 0; q < spec.n / 2; q++) {
        half.bits.set(q, true);
    }

    size_t observed_layers = std::max<size_t>(1, spec.n / 4);
    size_t first_observed = spec.depth > observed_layers ? spec.depth - observed_layers : 0;
    int64_t total = 0;
    size_t count = 0;
    Rng rng = Rng(spec.seed).split(2);
    run_interleaved(circuit, state, rng, 0,
                    [&](size_t layer, const StabilizerTableau &snapshot) {
                        if (layer >= first_observed) {
                            total += snapshot.subsystem_entropy(half);
                            count++;
                        }
                    });
    return static_cast<double>(total) / static_cast<double>(count);
}

SweepResult sweep_measurement_rate(const std::vector<size_t> &ns, const std::vector<double> &ps,
                                   size_t depth, size_t samples, uint64_t seed, size_t threads) {
    SweepResult out;
    std::vector<CircuitSpec> specs;
    Rng master(seed);
    for (size_t n : ns) {
        for (double p : ps) {
            for (size_t sample = 0; sample < samples; sample++) {
                CircuitSpec spec;
                spec.n = n;
                spec.depth = depth == 0 ? 2 * n : depth;
                spec.p = p;
                spec.seed = master.next_u64();
                SweepRecord record;
                record.n = n;
                record.p = p;
                record.sample = sample;
                record.seed = spec.seed;
                record.spec_hash = spec.hash();
                specs.push_back(spec);
                out.records.push_back(record);
            }
        }
    }
    auto compute = [&](size_t begin, size_t stride) {
        for (size_t k = begin; k < specs.size(); k += stride) {
            out.records[k].s_half = steady_half_chain_entropy(specs[k]);
        }
    };
    if (threads <= 1 || specs.size() <= 1) {
        compute(0, 1);
    } else {
        size_t workers = std::min(threads, specs.size());
        std::vector<std::thread> pool;
        for (size_t w = 0; w < workers; w++) {
            pool.emplace_back(compute, w, workers);
        }
        for (std::thread &t : pool) {
            t.join();
        }
    }
    return out;
}

DecouplingProfile decoupling_profile(const CircuitSpec &spec) {
    GeneratedCircuit circuit = gen_random_monitored_circuit(spec);
    CodeAnalysis analysis(circuit.schedule);
    DecouplingProfile out;
    for (size_t len = 1; len <= spec.n; len++) {
        SubsystemMask window = SubsystemMask::contiguous(spec.n, 0, len);
        DecouplingPoint point;
        point.len = len;
        point.i_ar = analysis.entropies(window).i_ar;
        point.g_a = analysis.cleaning(window).g_a;
        if (point.g_a > 0 && !out.onset.has_value()) {
            out.onset = static_cast<int64_t>(len);
        }
        out.points.push_back(point);
    }
    out.contiguous_distance = analysis.code_distance_contiguous();
    return out;
}

std::vector<int64_t> single_site_i_ar(const CodeAnalysis &analysis) {
    std::vector<int64_t> out;
    for (size_t q = 0; q < analysis.num_qubits(); q++) {
        out.push_back(analysis.entropies(SubsystemMask::from_indices(analysis.num_qubits(), {q})).i_ar);
    }
    return out;
}

StateIndependenceReport state_independence_check(const CircuitSpec &spec, const SubsystemMask &a,
                                                 uint64_t run_seed) {
    GeneratedCircuit circuit = gen_random_monitored_circuit(spec);
    MeasurementSchedule zero_start(spec.n, {});
    for (size_t q = 0; q < spec.n; q++) {
        zero_start.append(PauliString::single(spec.n, q, 'Z'));
    }
    for (const PauliString &op : circuit.schedule.ops) {
        zero_start.append(op);
    }

    StateIndependenceReport report;
    report.s_a_given_b_mixed = CodeAnalysis(circuit.schedule).entropies(a).s_a_given_b;
    report.s_a_given_b_zero = CodeAnalysis(zero_start).entropies(a).s_a_given_b;

    Rng rng(run_seed);
    DistillationResult mixed = distill_ab(circuit.schedule, a, rng);
    DistillationResult zeroed = distill_ab(zero_start, a, rng);
    report.ambiguity_mixed = mixed.ambiguity_log2;
    report.ambiguity_zero = zeroed.ambiguity_log2;
    report.fidelity_mixed = mixed.epr_fidelity;
    report.fidelity_zero = zeroed.epr_fidelity;
    report.conditional_entropy_equal = report.s_a_given_b_mixed == report.s_a_given_b_zero;
    report.fidelity_equal = report.fidelity_mixed == report.fidelity_zero;
    return report;
}

PauliGroupGens random_maximal_isotropic(size_t n, Rng &rng) {
    PauliGroupGens group(n);
    while (group.rank() < n) {
        PauliGroupGens comm = group.commutant();
        PauliString candidate(n);
        do {
            candidate = PauliString(n);
            for (const PauliString &g : comm.generators()) {
                if (rng.next_bit()) {
                    candidate = candidate * g;
                }
            }
            candidate.phase = 0;
        } while (group.contains(candidate));
        group.insert_if_independent(candidate);
    }
    return group;
}

PuritySwapReport purity_swap_check(const CircuitSpec &spec, const SubsystemMask &a, size_t samples,
                                   uint64_t seed) {
    if (samples == 0) {
        throw std::invalid_argument("Need at least one sample.");
    }
    if (a.num_qubits != spec.n) {
        throw std::invalid_argument("Subsystem mask width must match the circuit.");
    }
    GeneratedCircuit circuit = gen_random_monitored_circuit(spec);
    StabilizerTableau base = StabilizerTableau::with_reference(spec.n);
    Rng run_rng = Rng(seed).split(0);
    run_interleaved(circuit, base, run_rng, 0);

    size_t total = 2 * spec.n;
    SubsystemMask wide_a(total), wide_b(total);
    for (size_t q = 0; q < spec.n; q++) {
        (a.bits.get(q) ? wide_a : wide_b).bits.set(q, true);
    }

    PuritySwapReport report;
    report.samples = samples;
    double d_ref = std::ldexp(1.0, static_cast<int>(spec.n));
    report.rhs = d_ref / (d_ref + 1.0) *
                 (std::ldexp(1.0, -static_cast<int>(base.subsystem_entropy(wide_a))) +
                  std::ldexp(1.0, -static_cast<int>(base.subsystem_entropy(wide_b))));

    Rng sample_rng = Rng(seed).split(1);
    double sum = 0.0, sum_sq = 0.0;
    for (size_t k = 0; k < samples; k++) {
        PauliGroupGens basis = random_maximal_isotropic(spec.n, sample_rng);
        StabilizerTableau projected = base;
        int64_t before = projected.log2_prob();
        for (const PauliString &g : basis.generators()) {
            projected.measure(g.embedded(total, spec.n), sample_rng);
        }
        int64_t exponent = static_cast<int64_t>(spec.n) + (projected.log2_prob() - before) -
                           projected.subsystem_entropy(wide_a);
        double h = std::ldexp(1.0, static_cast<int>(exponent));
        sum += h;
        sum_sq += h * h;
    }
    report.sample_mean = sum / static_cast<double>(samples);
    double variance = sum_sq / static_cast<double>(samples) - report.sample_mean * report.sample_mean;
    report.std_error = std::sqrt(std::max(0.0, variance) / static_cast<double>(samples));
    return report;
}

namespace {

// Least squares of s against [l, l^gamma, log2 l] by normal equations.
struct GammaFit {
    double a = 0.0, b = 0.0, c = 0.0, rss = 0.0;
};

GammaFit fit_at_gamma(const std::vector<double> &l, const std::vector<double> &s, double gamma) {
    std::array<std::array<double, 3>, 3> m{};
    std::array<double, 3> v{};
    for (size_t k = 0; k < l.size(); k++) {
        std::array<double, 3> row{l[k], std::pow(l[k], gamma), std::log2(l[k])};
        for (size_t i = 0; i < 3; i++) {
            for (size_t j = 0; j < 3; j++) {
                m[i][j] += row[i] * row[j];
            }
            v[i] += row[i] * s[k];
        }
    }
    for (size_t col = 0; col < 3; col++) {
        size_t pivot = col;
        for (size_t r = col + 1; r < 3; r++) {
            if (std::abs(m[r][col]) > std::abs(m[pivot][col])) {
                pivot = r;
            }
        }
        std::swap(m[col], m[pivot]);
        std::swap(v[col], v[pivot]);
        if (std::abs(m[col][col]) < 1e-12) {
            m[col][col] = 1e-12;
        }
        for (size_t r = 0; r < 3; r++) {
            if (r == col) {
                continue;
            }
            double f = m[r][col] / m[col][col];
            for (size_t j = 0; j < 3; j++) {
                m[r][j] -= f * m[col][j];
            }
            v[r] -= f * v[col];
        }
    }
    GammaFit fit;
    fit.a = v[0] / m[0][0];
    fit.b = v[1] / m[1][1];
    fit.c = v[2] / m[2][2];
    for (size_t k = 0; k < l.size(); k++) {
        double predicted =
            fit.a * l[k] + fit.b * std::pow(l[k], gamma) + fit.c * std::log2(l[k]);
        double r = s[k] - predicted;
        fit.rss += r * r;
    }
    return fit;
}

}  // namespace

SubleadingFit subleading_fit(const std::vector<double> &l, const std::vector<double> &s) {
    if (l.size() != s.size()) {
        throw std::invalid_argument("Mismatched data lengths.");
    }
    std::vector<double> distinct = l;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 6) {
        throw std::invalid_argument("Need at least 6 distinct subsystem sizes.");
    }
    for (double value : l) {
        if (value <= 1.0) {
            throw std::invalid_argument("Subsystem sizes must exceed 1.");
        }
    }

    double best_gamma = 0.5;
    GammaFit best = fit_at_gamma(l, s, best_gamma);
    auto consider = [&](double gamma) {
        GammaFit fit = fit_at_gamma(l, s, gamma);
        if (fit.rss < best.rss) {
            best = fit;
            best_gamma = gamma;
        }
    };
    for (double gamma = 0.02; gamma < 0.99; gamma += 0.01) {
        consider(gamma);
    }
    double step = 0.01;
    for (int round = 0; round < 6; round++) {
        step /= 5.0;
        double center = best_gamma;
        for (int k = -5; k <= 5; k++) {
            double gamma = center + k * step;
            if (gamma > 0.0 && gamma < 1.0) {
                consider(gamma);
            }
        }
    }

    SubleadingFit out;
    out.a = best.a;
    out.b = best.b;
    out.gamma = best_gamma;
    out.c = best.c;
    out.rss = best.rss;
    for (size_t k = 0; k < l.size(); k++) {
        double predicted = out.a * l[k] + out.b * std::pow(l[k], out.gamma) +
                           out.c * std::log2(l[k]);
        out.residuals.push_back(s[k] - predicted);
    }
    return out;
}

double power_law_exponent(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("Need at least two points.");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    size_t count = 0;
    for (size_t k = 0; k < x.size(); k++) {
        if (x[k] <= 0.0 || y[k] <= 0.0) {
            throw std::invalid_argument("Power law fit needs positive data.");
        }
        double lx = std::log(x[k]), ly = std::log(y[k]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        count++;
    }
    double denom = count * sxx - sx * sx;
    if (std::abs(denom) < 1e-12) {
        throw std::invalid_argument("Power law fit needs two distinct abscissas.");
    }
    return (count * sxy - sx * sy) / denom;
}

}  // namespace moncode
