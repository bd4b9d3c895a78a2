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

#include <cstddef>
#include <vector>

#include "chm/core.hpp"

namespace chm {

/// Grid over the family domain: x = -pi/2 + k pi / gridN for k = 1..gridN,
/// both axes, rows ordered by (k1, k2).
struct ScanConfig {
    int gridN = 8;
    Tolerance tol{};
    unsigned threads = 0;  // 0: hardware concurrency
};

struct CensusRecord {
    double x1 = 0.0;
    double x2 = 0.0;
    int N = 0;
    double gramResidual = 0.0;
    bool h2Found = false;
    bool forbidden = false;
    bool limit = false;  // evaluated as the diagonal limit at the singular corner
};

struct ScanSummary {
    std::size_t rows = 0;
    int minN = 0;
    int maxN = 0;
    int forbiddenCount = 0;
};

double grid_coordinate(int k, int gridN);

CensusRecord census_record(double x1, double x2, Tolerance tol);

/// Throws Error(InvalidArgument) for gridN < 2.
std::vector<CensusRecord> run_scan(const ScanConfig& config);

ScanSummary summarize(const std::vector<CensusRecord>& records);

}  // namespace chm
