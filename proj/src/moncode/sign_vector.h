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

#ifndef MONCODE_SIGN_VECTOR_H
#define MONCODE_SIGN_VECTOR_H

#include <stdexcept>

#include "moncode/bitvec.h"

namespace moncode {

// Vector with entries in {+1, -1}, stored as bits with b = (1 - m) / 2 so
// that componentwise product is XOR.
struct SignVector {
    size_t len = 0;
    BitVec bits;

    SignVector() = default;
    explicit SignVector(size_t len) : len(len), bits(len) {
    }
    explicit SignVector(BitVec b) : len(b.num_bits), bits(std::move(b)) {
    }

    static SignVector all_plus(size_t len) {
        return SignVector(len);
    }

    // Accepts "+-+" or "(+1,-1,+1)" style text.
    static SignVector from_str(const std::string &text) {
        std::vector<int> entries;
        for (size_t k = 0; k < text.size(); k++) {
            char c = text[k];
            if (c == '+') {
                entries.push_back(+1);
            } else if (c == '-') {
                entries.push_back(-1);
            } else if (c != '(' && c != ')' && c != ',' && c != '1' && c != ' ') {
                throw std::invalid_argument("Bad sign vector text: " + text);
            }
        }
        SignVector v(entries.size());
        for (size_t k = 0; k < entries.size(); k++) {
            v.set_sign(k, entries[k]);
        }
        return v;
    }

    int sign_at(size_t k) const {
        return bits.get(k) ? -1 : +1;
    }

    void set_sign(size_t k, int s) {
        if (s != 1 && s != -1) {
            throw std::invalid_argument("Sign entries must be +1 or -1.");
        }
        bits.set(k, s == -1);
    }

    SignVector operator*(const SignVector &other) const {
        if (len != other.len) {
            throw std::invalid_argument("Length mismatch in sign vector product.");
        }
        return SignVector(bits ^ other.bits);
    }

    bool is_all_plus() const {
        return bits.is_zero();
    }

    bool operator==(const SignVector &other) const {
        return len == other.len && bits == other.bits;
    }
    bool operator!=(const SignVector &other) const {
        return !(*this == other);
    }
    bool operator<(const SignVector &other) const {
        return bits < other.bits;
    }

    // Compact form, e.g. "++-".
    std::string str() const {
        std::string result;
        result.reserve(len);
        for (size_t k = 0; k < len; k++) {
            result.push_back(bits.get(k) ? '-' : '+');
        }
        return result;
    }
};

}  // namespace moncode

#endif
