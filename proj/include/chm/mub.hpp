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

#include <optional>
#include <string>
#include <vector>

#include "chm/census.hpp"
#include "chm/core.hpp"
#include "chm/equivalence.hpp"

namespace chm {

/// maxDeviation is measured in CHM units: columns are rescaled to norm
/// sqrt(d), so unbiased entries of F^* G have modulus sqrt(d).
struct MuVerdict {
    bool ok = false;
    double maxDeviation = 0.0;
};

/// Columns of F and G are taken as bases after normalisation; both must have
/// pairwise orthogonal columns of equal norm (Error(NotBasis) otherwise).
MuVerdict mu_pair(const Matrix& f, const Matrix& g, Tolerance tol = {});

/// Every unordered pair must be unbiased; the worst pair's deviation is kept.
MuVerdict mu_set(const std::vector<Matrix>& bases, Tolerance tol = {});

inline constexpr int kRealEntryExclusionThreshold = 22;

struct RealCountEvidence {
    int count = 0;
    int threshold = kRealEntryExclusionThreshold;
};

struct SubChm3x3Evidence {
    SubmatrixLoc location;
    double residual = 0.0;
};

struct D0WitnessEvidence {
    EquivalenceWitness witness;
    double maxError = 0.0;
};

struct CensusAnomalyEvidence {
    int count = 0;
    H2Structure structure;
};

struct FiredRule {
    std::string id;  // R1..R4
    bool exclusion = true;
    std::optional<RealCountEvidence> realCount;
    std::optional<SubChm3x3Evidence> subChm;
    std::optional<D0WitnessEvidence> d0Witness;
    std::optional<CensusAnomalyEvidence> censusAnomaly;
};

/// Sufficient conditions for a 6x6 CHM to lie outside every CHM trio:
///   R1  more than 22 real entries
///   R2  a 3x3 sub-CHM
///   R3  complex equivalence to D0
/// R4 is diagnostic only: the matrix is H2-reducible yet its 2x2 sub-CHM
/// count is one of the forbidden values.
struct ExclusionReport {
    std::vector<FiredRule> rulesFired;

    bool excluded() const;
    const FiredRule* find(const std::string& id) const;
};

ExclusionReport exclusion_report(const Matrix& h, Tolerance tol = {});

/// R4 on its own, for callers that already hold the census and H2 results.
std::optional<FiredRule> census_anomaly_rule(int count, const std::optional<H2Structure>& structure);

}  // namespace chm
