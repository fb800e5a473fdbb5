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

#include "moncode/schedule.h"

#include <charconv>

namespace moncode {

static void check_op(size_t num_qubits, const PauliString &op) {
    if (op.num_qubits != num_qubits) {
        throw std::invalid_argument("Measured operator qubit count mismatch.");
    }
    if (!op.is_hermitian()) {
        throw std::invalid_argument("Measured operators must be Hermitian.");
    }
    if (op.is_identity()) {
        throw std::invalid_argument("Measured operators must not be the identity.");
    }
}

MeasurementSchedule::MeasurementSchedule(size_t num_qubits, std::vector<PauliString> ops)
    : num_qubits(num_qubits), ops(std::move(ops)) {
    for (const auto &op : this->ops) {
        check_op(num_qubits, op);
    }
}

void MeasurementSchedule::append(const PauliString &op) {
    check_op(num_qubits, op);
    ops.push_back(op);
}

MeasurementSchedule MeasurementSchedule::parse(const std::string &text) {
    MeasurementSchedule result;
    bool saw_header = false;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string::npos) {
            end = text.size();
        }
        std::string line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) {
            line.pop_back();
        }
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) {
            if (pos > text.size()) {
                break;
            }
            continue;
        }
        line = line.substr(start);
        if (!saw_header) {
            if (line.rfind("n=", 0) != 0) {
                throw ScheduleParseError(line_no, "expected header n=<qubit count>");
            }
            size_t value = 0;
            auto [ptr, ec] =
                std::from_chars(line.data() + 2, line.data() + line.size(), value);
            if (ec != std::errc() || ptr != line.data() + line.size() || value == 0) {
                throw ScheduleParseError(line_no, "bad qubit count in header: " + line);
            }
            result.num_qubits = value;
            saw_header = true;
            continue;
        }
        PauliString op;
        try {
            op = PauliString::from_str(line);
        } catch (const std::invalid_argument &ex) {
            throw ScheduleParseError(line_no, ex.what());
        }
        if (op.num_qubits != result.num_qubits) {
            throw ScheduleParseError(
                line_no, "operator has " + std::to_string(op.num_qubits) + " qubits, expected " +
                             std::to_string(result.num_qubits));
        }
        if (!op.is_hermitian()) {
            throw ScheduleParseError(line_no, "measured operators must carry sign + or -");
        }
        if (op.is_identity()) {
            throw ScheduleParseError(line_no, "measured operators must not be the identity");
        }
        result.ops.push_back(std::move(op));
    }
    if (!saw_header) {
        throw ScheduleParseError(line_no, "missing n=<qubit count> header");
    }
    return result;
}

std::string MeasurementSchedule::str() const {
    std::string out = "n=" + std::to_string(num_qubits) + "\n";
    for (const auto &op : ops) {
        out += op.str();
        out += "\n";
    }
    return out;
}

}  // namespace moncode
