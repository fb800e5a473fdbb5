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

#ifndef MONCODE_BITVEC_H
#define MONCODE_BITVEC_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace moncode {

constexpr size_t NO_BIT = SIZE_MAX;

// Fixed-length vector over GF(2), packed into 64-bit words.
struct BitVec {
    size_t num_bits = 0;
    std::vector<uint64_t> words;

    BitVec() = default;
    explicit BitVec(size_t num_bits);
    static BitVec from_str(const std::string &text);

    bool get(size_t k) const {
        return (words[k >> 6] >> (k & 63)) & 1;
    }
    void set(size_t k, bool v) {
        uint64_t m = uint64_t{1} << (k & 63);
        if (v) {
            words[k >> 6] |= m;
        } else {
            words[k >> 6] &= ~m;
        }
    }
    void toggle(size_t k) {
        words[k >> 6] ^= uint64_t{1} << (k & 63);
    }

    BitVec &operator^=(const BitVec &other);
    BitVec operator^(const BitVec &other) const;

    size_t popcount() const;
    // popcount(*this & other).
    size_t and_popcount(const BitVec &other) const;
    bool is_zero() const;
    // Index of the lowest set bit, or NO_BIT when empty.
    size_t lowest_set_bit() const;

    // Grows or shrinks to new_size, keeping low-index bits.
    void resize(size_t new_size);

    bool operator==(const BitVec &other) const;
    bool operator!=(const BitVec &other) const {
        return !(*this == other);
    }
    // Lexicographic order reading bit 0 first ("0…" sorts before "1…").
    bool operator<(const BitVec &other) const;

    // Bit characters in index order, e.g. "0110".
    std::string str() const;
};

}  // namespace moncode

#endif
