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

#ifndef MONCODE_RNG_H
#define MONCODE_RNG_H

#include <cstdint>

namespace moncode {

// Deterministic counter-based generator (SplitMix64 core). Streams derived
// with split() are independent of how much the parent has been consumed,
// so experiment records can name a reproducing seed for every sub-run.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {
    }

    static uint64_t mix(uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    uint64_t next_u64() {
        state += 0x9e3779b97f4a7c15ULL;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    bool next_bit() {
        return next_u64() & 1;
    }

    // Uniform in [0, n). Rejection sampled, so exact for every n > 0.
    uint64_t next_below(uint64_t n) {
        uint64_t zone = UINT64_MAX - UINT64_MAX % n;
        for (;;) {
            uint64_t v = next_u64();
            if (v < zone) {
                return v % n;
            }
        }
    }

    double next_double() {
        return (next_u64() >> 11) * 0x1.0p-53;
    }

    // Child stream identified by label; independent of this stream's position.
    Rng split(uint64_t label) const {
        return Rng(mix(state ^ mix(label ^ 0x5851f42d4c957f2dULL)));
    }
};

}  // namespace moncode

#endif
