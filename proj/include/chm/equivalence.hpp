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

#include <chrono>
#include <optional>
#include <vector>

#include "chm/core.hpp"

namespace chm {

/// A = P_r D_r B D_c P_c, stored entrywise:
///   apply_witness(B, W)(j, k) = rowPhases[j] * B(rowPerm[j], colPerm[k]) * colPhases[k]
/// Permutations hold 1-based indices.
struct EquivalenceWitness {
    std::vector<int> rowPerm;
    std::vector<int> colPerm;
    std::vector<Complex> rowPhases;
    std::vector<Complex> colPhases;

    static EquivalenceWitness identity(std::size_t d);
};

struct RealSubmatrixReport {
    std::vector<int> rows;  // 3 indices, 1-based
    std::vector<int> cols;  // 2 indices, 1-based
    int rank = 0;
};

/// M'(j,k) = M(j,k) M(1,1) / (M(j,1) M(1,k)). Throws ZeroPivot if a first-row
/// or first-column entry has modulus below eps.
Matrix dephase(const Matrix& m, Tolerance tol = {});

/// Throws DimensionMismatch, or InvalidArgument for malformed permutations or
/// non-unimodular phases.
Matrix apply_witness(const Matrix& m, const EquivalenceWitness& w, Tolerance tol = {});

struct EquivalenceOptions {
    Tolerance tol{};
    std::optional<std::chrono::milliseconds> timeout{};
};

/// Exhaustive search over row/column permutations of B. Returns the
/// lexicographically smallest (rowPerm, colPerm) witness with
/// apply_witness(B, W) == A within eps, or nullopt when none exists.
/// Throws NotChm for non-CHM input and Timeout when the optional deadline
/// passes first.
std::optional<EquivalenceWitness> are_equivalent(const Matrix& a, const Matrix& b,
                                                 const EquivalenceOptions& options = {});

int count_real_entries(const Matrix& m, Tolerance tol = {});

/// All 3x2 submatrices (of C(d,3)*C(d,2)) whose entries are real within eps,
/// with rank over the reals from the 2x2 minors.
std::vector<RealSubmatrixReport> real_submatrices_3x2(const Matrix& m, Tolerance tol = {});

}  // namespace chm
