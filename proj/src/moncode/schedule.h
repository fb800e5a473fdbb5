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

#ifndef MONCODE_SCHEDULE_H
#define MONCODE_SCHEDULE_H

#include <stdexcept>

#include "moncode/pauli_string.h"

namespace moncode {

// Parse failure carrying the 1-based source line.
struct ScheduleParseError : std::runtime_error {
    size_t line;
    ScheduleParseError(size_t line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {
    }
};

// Ordered list of Hermitian Pauli measurements on a fixed qubit count.
// Operators are stored in the frame where they are measured sequentially on
// the initial state, i.e. any circuit unitaries are already folded in.
struct MeasurementSchedule {
    size_t num_qubits = 0;
    std::vector<PauliString> ops;

    MeasurementSchedule() = default;
    MeasurementSchedule(size_t num_qubits, std::vector<PauliString> ops);

    size_t tau() const {
        return ops.size();
    }

    void append(const PauliString &op);

    // Text format:
    //   # optional comments
    //   n=<qubit count>
    //   +XXI
    //   -ZZX
    // One sign-prefixed operator per line, chronological order.
    static MeasurementSchedule parse(const std::string &text);
    std::string str() const;

    bool operator==(const MeasurementSchedule &other) const {
        return num_qubits == other.num_qubits && ops == other.ops;
    }
};

}  // namespace moncode

#endif
