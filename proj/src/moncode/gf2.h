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

#ifndef MONCODE_GF2_H
#define MONCODE_GF2_H

#include <optional>

#include "moncode/bitvec.h"

namespace moncode {

// Row space over GF(2) kept in reduced row echelon form. Pivots are the
// lowest-index set bit of each stored row and are strictly increasing.
struct Gf2RowSpace {
    size_t width = 0;
    std::vector<BitVec> rows;
    std::vector<size_t> pivots;

    Gf2RowSpace() = default;
    explicit Gf2RowSpace(size_t width) : width(width) {
    }

    size_t rank() const {
        return rows.size();
    }

    // XORs stored rows into v to clear every pivot position; the result is
    // zero exactly when v is in the span.
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec &v) const;

    // Adds v to the space. Returns true when the rank grew.
    bool insert(BitVec v);
};

size_t gf2_rank(std::vector<BitVec> rows);

// Coefficient vector c (one bit per row) with XOR_{c_i=1} rows[i] == target,
// or nullopt when target is outside the row span.
std::optional<BitVec> gf2_solve(const std::vector<BitVec> &rows, const BitVec &target);

// Basis of {c : XOR_{c_i=1} rows[i] == 0} (coefficient vectors over the rows).
std::vector<BitVec> gf2_kernel_basis(const std::vector<BitVec> &rows);

// Basis of {v : <row, v> == 0 for every row}, with <,> the GF(2) dot product.
std::vector<BitVec> gf2_nullspace(const std::vector<BitVec> &rows, size_t width);

}  // namespace moncode

#endif
