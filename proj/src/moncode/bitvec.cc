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

#include "moncode/bitvec.h"

#include <bit>
#include <stdexcept>

namespace moncode {

BitVec::BitVec(size_t num_bits) : num_bits(num_bits), words((num_bits + 63) >> 6, 0) {
}

BitVec BitVec::from_str(const std::string &text) {
    BitVec result(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        if (text[k] == '1') {
            result.set(k, true);
        } else if (text[k] != '0') {
            throw std::invalid_argument("Bit string may only contain '0' and '1': " + text);
        }
    }
    return result;
}

BitVec &BitVec::operator^=(const BitVec &other) {
    if (num_bits != other.num_bits) {
        throw std::invalid_argument("Length mismatch in bit vector xor.");
    }
    for (size_t w = 0; w < words.size(); w++) {
        words[w] ^= other.words[w];
    }
    return *this;
}

BitVec BitVec::operator^(const BitVec &other) const {
    BitVec result = *this;
    result ^= other;
    return result;
}

size_t BitVec::popcount() const {
    size_t total = 0;
    for (uint64_t w : words) {
        total += std::popcount(w);
    }
    return total;
}

size_t BitVec::and_popcount(const BitVec &other) const {
    if (num_bits != other.num_bits) {
        throw std::invalid_argument("Length mismatch in bit vector and_popcount.");
    }
    size_t total = 0;
    for (size_t w = 0; w < words.size(); w++) {
        total += std::popcount(words[w] & other.words[w]);
    }
    return total;
}

bool BitVec::is_zero() const {
    for (uint64_t w : words) {
        if (w) {
            return false;
        }
    }
    return true;
}

size_t BitVec::lowest_set_bit() const {
    for (size_t w = 0; w < words.size(); w++) {
        if (words[w]) {
            return (w << 6) + std::countr_zero(words[w]);
        }
    }
    return NO_BIT;
}

void BitVec::resize(size_t new_size) {
    words.resize((new_size + 63) >> 6, 0);
    num_bits = new_size;
    size_t tail = num_bits & 63;
    if (tail && !words.empty()) {
        words.back() &= (uint64_t{1} << tail) - 1;
    }
}

bool BitVec::operator==(const BitVec &other) const {
    return num_bits == other.num_bits && words == other.words;
}

bool BitVec::operator<(const BitVec &other) const {
    size_t common = std::min(words.size(), other.words.size());
    for (size_t w = 0; w < common; w++) {
        uint64_t diff = words[w] ^ other.words[w];
        if (diff) {
            size_t k = std::countr_zero(diff);
            // The vector holding 0 at the first differing index is smaller.
            return ((other.words[w] >> k) & 1) != 0;
        }
    }
    if (num_bits != other.num_bits) {
        for (size_t w = common; w < words.size(); w++) {
            if (words[w]) {
                return false;
            }
        }
        for (size_t w = common; w < other.words.size(); w++) {
            if (other.words[w]) {
                return true;
            }
        }
        return num_bits < other.num_bits;
    }
    return false;
}

std::string BitVec::str() const {
    std::string result;
    result.reserve(num_bits);
    for (size_t k = 0; k < num_bits; k++) {
        result.push_back(get(k) ? '1' : '0');
    }
    return result;
}

}  // namespace moncode
