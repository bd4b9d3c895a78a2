// Copyright 2026-present the chm6 authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "chm/core.hpp"

namespace chm {

/// Rows and columns of a submatrix, 1-based and strictly increasing.
struct SubmatrixLoc {
    std::vector<int> rows;
    std::vector<int> cols;

    auto operator<=>(const SubmatrixLoc&) const = default;
};

struct CensusResult {
    int count = 0;
    std::vector<SubmatrixLoc> locations;
};

using Pairing = std::vector<std::pair<int, int>>;

/// Row and column pairings under which all nine 2x2 blocks are sub-CHMs.
struct H2Structure {
    Pairing rowPairing;
    Pairing colPairing;

    bool operator==(const H2Structure&) const = default;
};

/// [[a, b], [c, d]] of unimodular entries is proportional to a CHM iff
/// |a d + b c| vanishes. The row-orthogonality form |a conj(c) + b conj(d)|
/// is evaluated alongside; a gap above 10 eps between the two throws
/// Error(Internal). Throws NotUnimodular on non-unimodular input.
CheckResult is_sub_chm_2x2(Complex a, Complex b, Complex c, Complex d, Tolerance tol = {});

/// All C(d,2)^2 2x2 submatrices, row sets outer, column sets inner.
CensusResult census_2x2(const Matrix& m, Tolerance tol = {});

/// Largest pairwise row inner-product modulus of a 3x3 submatrix.
double sub_chm_3x3_residual(const Matrix& m, const SubmatrixLoc& loc);

/// 3x3 submatrices whose rows are pairwise orthogonal within 3 eps.
std::vector<SubmatrixLoc> find_3x3_sub_chms(const Matrix& m, Tolerance tol = {});

/// The 15 perfect matchings of {1..6}, lexicographic.
const std::vector<Pairing>& perfect_matchings_of_six();

/// First (rowPairing, colPairing) in lexicographic order with all nine blocks
/// sub-CHMs. Requires a 6x6 CHM.
std::optional<H2Structure> h2_block_structure(const Matrix& m, Tolerance tol = {});

/// False exactly for N in {10, ..., 16, 18}.
bool forbidden_count_check(int n);

}  // namespace chm
