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

#include "moncode/gf2.h"

#include <algorithm>
#include <stdexcept>

namespace moncode {

BitVec Gf2RowSpace::reduce(BitVec v) const {
    if (v.num_bits != width) {
        throw std::invalid_argument("Vector width does not match row space width.");
    }
    for (size_t r = 0; r < rows.size(); r++) {
        if (v.get(pivots[r])) {
            v ^= rows[r];
        }
    }
    return v;
}

bool Gf2RowSpace::contains(const BitVec &v) const {
    return reduce(v).is_zero();
}

bool Gf2RowSpace::insert(BitVec v) {
    v = reduce(std::move(v));
    size_t p = v.lowest_set_bit();
    if (p == NO_BIT) {
        return false;
    }
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].get(p)) {
            rows[r] ^= v;
        }
    }
    size_t at = std::lower_bound(pivots.begin(), pivots.end(), p) - pivots.begin();
    rows.insert(rows.begin() + at, std::move(v));
    pivots.insert(pivots.begin() + at, p);
    return true;
}

size_t gf2_rank(std::vector<BitVec> rows) {
    if (rows.empty()) {
        return 0;
    }
    Gf2RowSpace space(rows[0].num_bits);
    for (auto &r : rows) {
        space.insert(std::move(r));
    }
    return space.rank();
}

std::optional<BitVec> gf2_solve(const std::vector<BitVec> &rows, const BitVec &target) {
    size_t n = rows.size();
    // Echelonize while tracking which original rows combine into each pivot row.
    std::vector<BitVec> echelon;
    std::vector<BitVec> combos;
    std::vector<size_t> pivots;
    for (size_t i = 0; i < n; i++) {
        BitVec v = rows[i];
        BitVec c(n);
        c.set(i, true);
        for (size_t r = 0; r < echelon.size(); r++) {
            if (v.get(pivots[r])) {
                v ^= echelon[r];
                c ^= combos[r];
            }
        }
        size_t p = v.lowest_set_bit();
        if (p == NO_BIT) {
            continue;
        }
        size_t at = std::lower_bound(pivots.begin(), pivots.end(), p) - pivots.begin();
        echelon.insert(echelon.begin() + at, std::move(v));
        combos.insert(combos.begin() + at, std::move(c));
        pivots.insert(pivots.begin() + at, p);
    }
    BitVec v = target;
    BitVec c(n);
    for (size_t r = 0; r < echelon.size(); r++) {
        if (v.get(pivots[r])) {
            v ^= echelon[r];
            c ^= combos[r];
        }
    }
    if (!v.is_zero()) {
        return std::nullopt;
    }
    return c;
}

std::vector<BitVec> gf2_kernel_basis(const std::vector<BitVec> &rows) {
    size_t n = rows.size();
    std::vector<BitVec> echelon;
    std::vector<BitVec> combos;
    std::vector<size_t> pivots;
    std::vector<BitVec> kernel;
    for (size_t i = 0; i < n; i++) {
        BitVec v = rows[i];
        BitVec c(n);
        c.set(i, true);
        for (size_t r = 0; r < echelon.size(); r++) {
            if (v.get(pivots[r])) {
                v ^= echelon[r];
                c ^= combos[r];
            }
        }
        size_t p = v.lowest_set_bit();
        if (p == NO_BIT) {
            kernel.push_back(std::move(c));
            continue;
        }
        size_t at = std::lower_bound(pivots.begin(), pivots.end(), p) - pivots.begin();
        echelon.insert(echelon.begin() + at, std::move(v));
        combos.insert(combos.begin() + at, std::move(c));
        pivots.insert(pivots.begin() + at, p);
    }
    return kernel;
}

std::vector<BitVec> gf2_nullspace(const std::vector<BitVec> &rows, size_t width) {
    Gf2RowSpace space(width);
    for (const auto &r : rows) {
        space.insert(r);
    }
    std::vector<bool> is_pivot(width, false);
    for (size_t p : space.pivots) {
        is_pivot[p] = true;
    }
    std::vector<BitVec> basis;
    for (size_t j = 0; j < width; j++) {
        if (is_pivot[j]) {
            continue;
        }
        BitVec v(width);
        v.set(j, true);
        for (size_t r = 0; r < space.rows.size(); r++) {
            if (space.rows[r].get(j)) {
                v.set(space.pivots[r], true);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace moncode
