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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "moncode/distill.h"
#include "moncode/experiments.h"
#include "moncode/groups.h"
#include "moncode/verify.h"

using json = nlohmann::json;
using namespace moncode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInvariantViolation = 2;

struct GlobalArgs {
    uint64_t seed = 0;
    std::string out_path;
    std::string format;  // "", "json", or "csv"; empty means command default
};

// Sink that owns the optional output file so all writers see one ostream.
struct Output {
    std::ofstream file;
    std::ostream *stream = nullptr;

    explicit Output(const std::string &path) {
        if (path.empty()) {
            stream = &std::cout;
            return;
        }
        file.open(path, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw std::invalid_argument("Cannot open output file: " + path);
        }
        stream = &file;
    }
    std::ostream &os() {
        return *stream;
    }
};

std::string resolve_format(const GlobalArgs &args, const std::string &fallback) {
    return args.format.empty() ? fallback : args.format;
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.10g", value);
    return buffer;
}

MeasurementSchedule load_schedule(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("Cannot open schedule file: " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return MeasurementSchedule::parse(text.str());
    } catch (const ScheduleParseError &e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

SubsystemMask parse_subsystem(const std::string &text, size_t n) {
    std::vector<size_t> indices;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        long long value = std::stoll(item, &used);
        if (used != item.size() || value < 0) {
            throw std::invalid_argument("Bad subsystem index: " + item);
        }
        indices.push_back(static_cast<size_t>(value));
    }
    if (indices.empty()) {
        throw std::invalid_argument("Subsystem must list at least one qubit.");
    }
    return SubsystemMask::from_indices(n, indices);
}

// Accepts "0.1", "0.1,0.2", or "start:stop:step" (inclusive).
std::vector<double> parse_grid(const std::string &text) {
    std::vector<double> values;
    if (text.find(':') != std::string::npos) {
        double start = 0, stop = 0, step = 0;
        char c1 = 0, c2 = 0;
        std::istringstream in(text);
        if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' || step <= 0 ||
            stop < start) {
            throw std::invalid_argument("Bad grid (want start:stop:step): " + text);
        }
        long long count = static_cast<long long>((stop - start) / step + 1e-9);
        for (long long k = 0; k <= count; k++) {
            values.push_back(start + static_cast<double>(k) * step);
        }
        return values;
    }
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        values.push_back(std::stod(item, &used));
        if (used != item.size()) {
            throw std::invalid_argument("Bad number: " + item);
        }
    }
    if (values.empty()) {
        throw std::invalid_argument("Empty value list: " + text);
    }
    return values;
}

std::vector<size_t> parse_size_list(const std::string &text) {
    std::vector<size_t> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t used = 0;
        long long value = std::stoll(item, &used);
        if (used != item.size() || value <= 0) {
            throw std::invalid_argument("Bad size: " + item);
        }
        values.push_back(static_cast<size_t>(value));
    }
    if (values.empty()) {
        throw std::invalid_argument("Empty size list: " + text);
    }
    return values;
}

size_t env_thread_count() {
    const char *text = std::getenv("MONCODE_THREADS");
    if (text == nullptr || *text == '\0') {
        return 1;
    }
    long long value = std::atoll(text);
    return value > 0 ? static_cast<size_t>(value) : 1;
}

json fidelity_log2_json(const Dyadic &fidelity) {
    if (fidelity.num == 1) {
        return -fidelity.log2_den;
    }
    return nullptr;
}

std::string csv_escape(const std::string &text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    return quoted + "\"";
}

int run_analyze(const GlobalArgs &args, const std::string &schedule_path,
                const std::string &subsystem_text) {
    MeasurementSchedule schedule = load_schedule(schedule_path);
    SubsystemMask a = parse_subsystem(subsystem_text, schedule.num_qubits);
    CodeAnalysis analysis(schedule);
    EntropyReport entropies = analysis.entropies(a);
    CleaningReport cleaning = analysis.cleaning(a);
    std::optional<int64_t> distance = analysis.code_distance_contiguous();

    Output out(args.out_path);
    std::string format = resolve_format(args, "json");
    if (format == "json") {
        json doc{
            {"n", schedule.num_qubits},
            {"tau", schedule.tau()},
            {"subsystem", a.indices()},
            {"s_a", entropies.s_a},
            {"s_b", entropies.s_b},
            {"s_r", entropies.s_r},
            {"s_ab", entropies.s_ab},
            {"s_a_given_b", entropies.s_a_given_b},
            {"s_ab_given_r", entropies.s_ab_given_r},
            {"i_ab", entropies.i_ab},
            {"i_ar", entropies.i_ar},
            {"recoverable", analysis.code().recoverable(a)},
            {"ambiguity_log2", analysis.code().log2_null_count(a)},
            {"g", cleaning.g},
            {"g_a", cleaning.g_a},
            {"g_b", cleaning.g_b},
            {"cleaning_identities_hold", cleaning.identities_hold},
            {"code_distance_contiguous", distance ? json(*distance) : json(nullptr)},
        };
        out.os() << doc.dump(2) << "\n";
    } else {
        out.os() << "n,tau,subsystem,s_a,s_b,s_r,s_ab,s_a_given_b,s_ab_given_r,i_ab,i_ar,"
                    "recoverable,ambiguity_log2,g,g_a,g_b,cleaning_identities_hold,"
                    "code_distance_contiguous\n";
        std::string subsystem;
        for (size_t q : a.indices()) {
            subsystem += (subsystem.empty() ? "" : ";") + std::to_string(q);
        }
        out.os() << schedule.num_qubits << "," << schedule.tau() << "," << subsystem << ","
                 << entropies.s_a << "," << entropies.s_b << "," << entropies.s_r << ","
                 << entropies.s_ab << "," << entropies.s_a_given_b << ","
                 << entropies.s_ab_given_r << "," << entropies.i_ab << "," << entropies.i_ar << ","
                 << (analysis.code().recoverable(a) ? 1 : 0) << ","
                 << analysis.code().log2_null_count(a) << "," << cleaning.g << "," << cleaning.g_a
                 << "," << cleaning.g_b << "," << (cleaning.identities_hold ? 1 : 0) << ","
                 << (distance ? std::to_string(*distance) : "") << "\n";
    }
    return kExitOk;
}

int run_distill(const GlobalArgs &args, const std::string &schedule_path,
                const std::string &subsystem_text, const std::string &mode, size_t runs,
                bool exhaustive) {
    MeasurementSchedule schedule = load_schedule(schedule_path);
    std::string format = resolve_format(args, "json");
    if (mode == "ab" && subsystem_text.empty()) {
        throw std::invalid_argument("--mode ab requires --subsystem.");
    }
    if (mode != "ab" && !subsystem_text.empty()) {
        throw std::invalid_argument("--subsystem is only meaningful with --mode ab.");
    }
    if (exhaustive && mode != "ab") {
        throw std::invalid_argument("--exhaustive requires --mode ab.");
    }

    Output out(args.out_path);
    auto emit = [&](const json &line, const std::vector<std::string> &columns) {
        if (format == "json") {
            out.os() << line.dump() << "\n";
            return;
        }
        std::string row;
        for (const std::string &column : columns) {
            const json &cell = line.at(column);
            std::string text;
            if (cell.is_null()) {
                text = "";
            } else if (cell.is_string()) {
                text = cell.get<std::string>();
            } else {
                text = cell.dump();
            }
            row += (row.empty() ? "" : ",") + csv_escape(text);
        }
        out.os() << row << "\n";
    };
    auto header = [&](const std::vector<std::string> &columns) {
        if (format != "csv") {
            return;
        }
        std::string row;
        for (const std::string &column : columns) {
            row += (row.empty() ? "" : ",") + column;
        }
        out.os() << row << "\n";
    };

    if (mode == "ab") {
        SubsystemMask a = parse_subsystem(subsystem_text, schedule.num_qubits);
        if (exhaustive) {
            std::vector<std::string> columns = {"m",        "m_bar",          "s",
                                                "feedback", "fidelity",       "fidelity_log2",
                                                "ambiguity_log2", "log2_prob"};
            header(columns);
            enumerate_pair_distillations(schedule, a, [&](const PairBranch &branch) {
                emit(json{{"m", branch.result.m.str()},
                          {"m_bar", branch.result.m_bar.str()},
                          {"s", branch.result.s.str()},
                          {"feedback", branch.result.feedback.str()},
                          {"fidelity", branch.result.epr_fidelity.str()},
                          {"fidelity_log2", fidelity_log2_json(branch.result.epr_fidelity)},
                          {"ambiguity_log2", branch.result.ambiguity_log2},
                          {"log2_prob", branch.log2_prob}},
                     columns);
            });
            return kExitOk;
        }
        std::vector<std::string> columns = {"m",        "m_bar",    "s",
                                            "feedback", "fidelity", "fidelity_log2",
                                            "ambiguity_log2", "seed"};
        header(columns);
        Rng master(args.seed);
        for (size_t r = 0; r < runs; r++) {
            uint64_t run_seed = r == 0 ? args.seed : master.split(r).next_u64();
            Rng rng(run_seed);
            DistillationResult result = distill_ab(schedule, a, rng);
            result.seed = run_seed;
            emit(json{{"m", result.m.str()},
                      {"m_bar", result.m_bar.str()},
                      {"s", result.s.str()},
                      {"feedback", result.feedback.str()},
                      {"fidelity", result.epr_fidelity.str()},
                      {"fidelity_log2", fidelity_log2_json(result.epr_fidelity)},
                      {"ambiguity_log2", result.ambiguity_log2},
                      {"seed", run_seed}},
                 columns);
        }
        return kExitOk;
    }
    if (mode == "sysref") {
        std::vector<std::string> columns = {"m",        "m_bar",    "s",   "selector",
                                            "feedback", "fidelity", "fidelity_log2", "seed"};
        header(columns);
        Rng master(args.seed);
        for (size_t r = 0; r < runs; r++) {
            uint64_t run_seed = r == 0 ? args.seed : master.split(r).next_u64();
            Rng rng(run_seed);
            ChoiResult result = distill_system_reference(schedule, rng);
            emit(json{{"m", result.m.str()},
                      {"m_bar", result.m_bar.str()},
                      {"s", result.s.str()},
                      {"selector", result.selector.str()},
                      {"feedback", result.feedback.str()},
                      {"fidelity", nullptr},
                      {"fidelity_log2", nullptr},
                      {"seed", run_seed}},
                 columns);
        }
        return kExitOk;
    }
    if (mode == "gh") {
        std::vector<std::string> columns = {"m",        "m_bar",         "s",
                                            "feedback", "fidelity",      "fidelity_log2",
                                            "ambiguity_log2", "decode_failed", "seed"};
        header(columns);
        CliffordMap encoding = CliffordMap::identity(schedule.num_qubits);
        Rng master(args.seed);
        for (size_t r = 0; r < runs; r++) {
            uint64_t run_seed = r == 0 ? args.seed : master.split(r).next_u64();
            Rng rng(run_seed);
            EncodedReferenceResult result = distill_encoded_reference(schedule, encoding, rng);
            emit(json{{"m", result.m.str()},
                      {"m_bar", result.m_bar.str()},
                      {"s", result.s.str()},
                      {"feedback", result.feedback.str()},
                      {"fidelity", result.epr_fidelity.str()},
                      {"fidelity_log2", fidelity_log2_json(result.epr_fidelity)},
                      {"ambiguity_log2", result.ambiguity_log2},
                      {"decode_failed", result.decode_failed},
                      {"seed", run_seed}},
                 columns);
        }
        return kExitOk;
    }
    throw std::invalid_argument("Unknown distill mode: " + mode);
}

int run_groups(const GlobalArgs &args, const std::string &schedule_path, bool steps) {
    MeasurementSchedule schedule = load_schedule(schedule_path);
    std::vector<PauliGroupGens> stab_steps = stabilizer_steps(schedule);
    std::vector<PauliGroupGens> logic_steps = logical_steps(schedule);

    auto generator_strings = [](const PauliGroupGens &group) {
        std::vector<std::string> texts;
        for (const PauliString &g : group.generators()) {
            texts.push_back(g.str());
        }
        return texts;
    };

    Output out(args.out_path);
    std::string format = resolve_format(args, "json");
    if (format == "json") {
        const PauliGroupGens &stab = stab_steps.back();
        const PauliGroupGens &logic = logic_steps.back();
        json doc{
            {"n", schedule.num_qubits},
            {"tau", schedule.tau()},
            {"stabilizer", {{"rank", stab.rank()}, {"generators", generator_strings(stab)}}},
            {"logical", {{"rank", logic.rank()}, {"generators", generator_strings(logic)}}},
            {"logical_qubits", logical_qubit_count(logic, stab)},
        };
        if (steps) {
            json list = json::array();
            for (size_t t = 0; t < stab_steps.size(); t++) {
                list.push_back(
                    {{"t", t},
                     {"stabilizer",
                      {{"rank", stab_steps[t].rank()},
                       {"generators", generator_strings(stab_steps[t])}}},
                     {"logical",
                      {{"rank", logic_steps[t].rank()},
                       {"generators", generator_strings(logic_steps[t])}}},
                     {"logical_qubits", logical_qubit_count(logic_steps[t], stab_steps[t])}});
            }
            doc["steps"] = list;
        }
        out.os() << doc.dump(2) << "\n";
    } else {
        out.os() << "t,stabilizer_rank,logical_rank,logical_qubits\n";
        size_t first = steps ? 0 : stab_steps.size() - 1;
        for (size_t t = first; t < stab_steps.size(); t++) {
            out.os() << t << "," << stab_steps[t].rank() << "," << logic_steps[t].rank() << ","
                     << logical_qubit_count(logic_steps[t], stab_steps[t]) << "\n";
        }
    }
    return kExitOk;
}

int run_verify(const GlobalArgs &args, const std::string &suite, const VerifyOptions &options) {
    std::vector<CheckResult> results = run_verify_suite(suite, options);
    Output out(args.out_path);
    std::string format = resolve_format(args, "json");
    if (format == "csv") {
        out.os() << "check,passed,cases,detail\n";
    }
    size_t passed = 0;
    bool empty = false;
    for (const CheckResult &r : results) {
        if (format == "json") {
            out.os() << json{{"check", r.name},
                             {"passed", r.passed},
                             {"cases", r.cases},
                             {"detail", r.detail}}
                            .dump()
                     << "\n";
        } else {
            out.os() << r.name << "," << (r.passed ? 1 : 0) << "," << r.cases << ","
                     << csv_escape(r.detail) << "\n";
        }
        passed += r.passed ? 1 : 0;
        empty = empty || r.cases == 0;
    }
    std::cerr << "verify: " << passed << "/" << results.size() << " checks passed\n";
    if (passed != results.size() || empty) {
        return kExitInvariantViolation;
    }
    return kExitOk;
}

int run_sweep(const GlobalArgs &args, const std::string &n_text, const std::string &p_text,
              size_t samples, size_t depth) {
    std::vector<size_t> ns = parse_size_list(n_text);
    std::vector<double> ps = parse_grid(p_text);
    for (double p : ps) {
        if (p < 0 || p > 1) {
            throw std::invalid_argument("Measurement rate out of [0, 1]: " + format_double(p));
        }
    }
    SweepResult result = sweep_measurement_rate(ns, ps, depth, samples, args.seed,
                                                env_thread_count());

    Output out(args.out_path);
    std::string format = resolve_format(args, "csv");
    if (format == "csv") {
        out.os() << "n,p,sample,seed,S_half,spec_hash\n";
        for (const SweepRecord &r : result.records) {
            out.os() << r.n << "," << format_double(r.p) << "," << r.sample << "," << r.seed << ","
                     << format_double(r.s_half) << "," << r.spec_hash << "\n";
        }
    } else {
        for (const SweepRecord &r : result.records) {
            out.os() << json{{"n", r.n},
                             {"p", r.p},
                             {"sample", r.sample},
                             {"seed", r.seed},
                             {"S_half", r.s_half},
                             {"spec_hash", r.spec_hash}}
                            .dump()
                     << "\n";
        }
    }
    return kExitOk;
}

int run_profile(const GlobalArgs &args, size_t n, size_t depth, double p, bool open_boundary) {
    CircuitSpec spec;
    spec.n = n;
    spec.depth = depth == 0 ? 2 * n : depth;
    spec.p = p;
    spec.periodic = !open_boundary;
    spec.seed = args.seed;
    DecouplingProfile profile = decoupling_profile(spec);

    Output out(args.out_path);
    std::string format = resolve_format(args, "json");
    if (format == "json") {
        json points = json::array();
        for (const DecouplingPoint &point : profile.points) {
            points.push_back({{"len", point.len}, {"i_ar", point.i_ar}, {"g_a", point.g_a}});
        }
        json doc{
            {"n", spec.n},
            {"p", spec.p},
            {"depth", spec.depth},
            {"seed", spec.seed},
            {"spec_hash", spec.hash()},
            {"onset", profile.onset ? json(*profile.onset) : json(nullptr)},
            {"contiguous_distance",
             profile.contiguous_distance ? json(*profile.contiguous_distance) : json(nullptr)},
            {"points", points},
        };
        out.os() << doc.dump(2) << "\n";
    } else {
        out.os() << "n,p,depth,seed,len,i_ar,g_a\n";
        for (const DecouplingPoint &point : profile.points) {
            out.os() << spec.n << "," << format_double(spec.p) << "," << spec.depth << ","
                     << spec.seed << "," << point.len << "," << point.i_ar << "," << point.g_a
                     << "\n";
        }
    }
    return kExitOk;
}

int run_fit(const GlobalArgs &args, const std::string &input_path, const std::string &x_column,
            const std::string &y_column, const std::string &law) {
    std::ifstream in(input_path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("Cannot open input file: " + input_path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("Empty input file: " + input_path);
    }
    auto split = [](const std::string &row) {
        std::vector<std::string> cells;
        std::stringstream stream(row);
        std::string cell;
        while (std::getline(stream, cell, ',')) {
            cells.push_back(cell);
        }
        return cells;
    };
    std::vector<std::string> headers = split(line);
    size_t x_index = headers.size();
    size_t y_index = headers.size();
    for (size_t k = 0; k < headers.size(); k++) {
        if (headers[k] == x_column) {
            x_index = k;
        }
        if (headers[k] == y_column) {
            y_index = k;
        }
    }
    if (x_index == headers.size() || y_index == headers.size()) {
        throw std::invalid_argument("Input is missing column " +
                                    (x_index == headers.size() ? x_column : y_column));
    }

    // Average y over repeated x values (sweep samples), keyed exactly.
    std::map<double, std::pair<double, size_t>> grouped;
    size_t line_number = 1;
    while (std::getline(in, line)) {
        line_number++;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells = split(line);
        if (cells.size() <= std::max(x_index, y_index)) {
            throw std::invalid_argument(input_path + ": line " + std::to_string(line_number) +
                                        ": too few columns");
        }
        try {
            double x = std::stod(cells[x_index]);
            double y = std::stod(cells[y_index]);
            grouped[x].first += y;
            grouped[x].second++;
        } catch (const std::exception &) {
            throw std::invalid_argument(input_path + ": line " + std::to_string(line_number) +
                                        ": bad number");
        }
    }
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto &entry : grouped) {
        xs.push_back(entry.first);
        ys.push_back(entry.second.first / static_cast<double>(entry.second.second));
    }

    Output out(args.out_path);
    std::string format = resolve_format(args, "json");
    if (law == "subleading") {
        SubleadingFit fit = subleading_fit(xs, ys);
        if (format == "json") {
            out.os() << json{{"law", "subleading"},
                             {"a", fit.a},
                             {"b", fit.b},
                             {"gamma", fit.gamma},
                             {"c", fit.c},
                             {"rss", fit.rss},
                             {"points", xs.size()}}
                            .dump(2)
                     << "\n";
        } else {
            out.os() << "law,a,b,gamma,c,rss,points\n";
            out.os() << "subleading," << format_double(fit.a) << "," << format_double(fit.b) << ","
                     << format_double(fit.gamma) << "," << format_double(fit.c) << ","
                     << format_double(fit.rss) << "," << xs.size() << "\n";
        }
        return kExitOk;
    }
    if (law == "power") {
        double exponent = power_law_exponent(xs, ys);
        if (format == "json") {
            out.os() << json{{"law", "power"}, {"exponent", exponent}, {"points", xs.size()}}.dump(2)
                     << "\n";
        } else {
            out.os() << "law,exponent,points\n";
            out.os() << "power," << format_double(exponent) << "," << xs.size() << "\n";
        }
        return kExitOk;
    }
    throw std::invalid_argument("Unknown fit law: " + law);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Entanglement analysis of monitored Clifford circuits via dual classical codes"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalArgs args;
    app.add_option("--seed", args.seed, "Base seed for all randomness")->capture_default_str();
    app.add_option("--out", args.out_path, "Output file (default: stdout)");
    app.add_option("--format", args.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string schedule_path;
    std::string subsystem_text;
    CLI::App *analyze = app.add_subcommand(
        "analyze", "Entropy, recoverability, and cleaning report for one subsystem");
    analyze->add_option("--schedule", schedule_path, "Measurement schedule file")->required();
    analyze->add_option("--subsystem", subsystem_text, "Comma-separated qubit indices (0-based)")
        ->required();

    std::string mode = "ab";
    size_t runs = 1;
    bool exhaustive = false;
    CLI::App *distill = app.add_subcommand("distill", "Run entanglement distillation protocols");
    distill->add_option("--schedule", schedule_path, "Measurement schedule file")->required();
    distill->add_option("--subsystem", subsystem_text, "Cut qubits for --mode ab");
    distill->add_option("--mode", mode, "Protocol: ab, sysref, or gh")
        ->check(CLI::IsMember({"ab", "sysref", "gh"}))
        ->capture_default_str();
    distill->add_option("--runs", runs, "Sampled runs to emit")->capture_default_str();
    distill->add_flag("--exhaustive", exhaustive, "Enumerate every outcome branch (ab only)");

    bool steps = false;
    CLI::App *groups =
        app.add_subcommand("groups", "Stabilizer and logical groups of a schedule");
    groups->add_option("--schedule", schedule_path, "Measurement schedule file")->required();
    groups->add_flag("--steps", steps, "Include per-measurement snapshots");

    std::string suite = "all";
    VerifyOptions verify_options;
    CLI::App *verify = app.add_subcommand(
        "verify", "Re-derive the dual-code identities on random instances");
    verify->add_option("--suite", suite, "theorems, lemmas, groups, probability, or all")
        ->capture_default_str();
    verify->add_option("--trials", verify_options.trials, "Random instances per check")
        ->capture_default_str();
    verify->add_option("--n-max", verify_options.n_max, "Largest qubit count")
        ->capture_default_str();
    verify->add_option("--tau-max", verify_options.tau_max, "Largest schedule length")
        ->capture_default_str();

    std::string n_text;
    std::string p_text;
    size_t samples = 20;
    size_t depth = 0;
    CLI::App *sweep = app.add_subcommand(
        "sweep", "Steady-state half-chain entropy over a measurement-rate grid");
    sweep->add_option("--n", n_text, "Comma-separated system sizes")->required();
    sweep->add_option("--p", p_text, "Rates: value, comma list, or start:stop:step")->required();
    sweep->add_option("--samples", samples, "Circuits per (n, p) point")->capture_default_str();
    sweep->add_option("--depth", depth, "Circuit depth (0 means 2n)")->capture_default_str();

    size_t profile_n = 16;
    double profile_p = 0.1;
    size_t profile_depth = 0;
    bool open_boundary = false;
    CLI::App *profile = app.add_subcommand(
        "profile", "Reference mutual information and cleanable counts per window");
    profile->add_option("--n", profile_n, "System size")->required();
    profile->add_option("--p", profile_p, "Measurement rate")->capture_default_str();
    profile->add_option("--depth", profile_depth, "Circuit depth (0 means 2n)")
        ->capture_default_str();
    profile->add_flag("--open-boundary", open_boundary, "Use open instead of periodic boundary");

    std::string input_path;
    std::string x_column = "n";
    std::string y_column = "S_half";
    std::string law = "subleading";
    CLI::App *fit = app.add_subcommand("fit", "Fit entropy scaling laws to sweep output");
    fit->add_option("--input", input_path, "CSV file with a header row")->required();
    fit->add_option("--x", x_column, "Column with sizes")->capture_default_str();
    fit->add_option("--y", y_column, "Column with entropies")->capture_default_str();
    fit->add_option("--law", law, "subleading or power")
        ->check(CLI::IsMember({"subleading", "power"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (analyze->parsed()) {
            return run_analyze(args, schedule_path, subsystem_text);
        }
        if (distill->parsed()) {
            return run_distill(args, schedule_path, subsystem_text, mode, runs, exhaustive);
        }
        if (groups->parsed()) {
            return run_groups(args, schedule_path, steps);
        }
        if (verify->parsed()) {
            verify_options.seed = args.seed == 0 ? verify_options.seed : args.seed;
            return run_verify(args, suite, verify_options);
        }
        if (sweep->parsed()) {
            return run_sweep(args, n_text, p_text, samples, depth);
        }
        if (profile->parsed()) {
            return run_profile(args, profile_n, profile_depth, profile_p, open_boundary);
        }
        if (fit->parsed()) {
            return run_fit(args, input_path, x_column, y_column, law);
        }
        std::cerr << "error: no subcommand given\n";
        return kExitInputError;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInvariantViolation;
    }
}
