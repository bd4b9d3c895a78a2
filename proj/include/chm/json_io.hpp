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

// JSON and CSV surfaces. Reals are written with at most 12 significant
// digits, '.' as decimal separator and no locale dependence.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chm/census.hpp"
#include "chm/core.hpp"
#include "chm/equivalence.hpp"
#include "chm/mub.hpp"
#include "chm/scan.hpp"

namespace chm::io {

using Json = nlohmann::ordered_json;

/// %.12g-style text; negative zero prints as 0.
std::string format_real(double x);

/// x rounded to 12 significant digits.
double round_real(double x);

/// Compact single-line dump terminated by '\n'.
std::string dump(const Json& j);

Json to_json(Complex z);
Json to_json(const Matrix& m);
Json to_json(const EquivalenceWitness& w);
Json to_json(const SubmatrixLoc& loc);
Json to_json(const CensusResult& c);
Json to_json(const std::vector<SubmatrixLoc>& locs);
Json to_json(const H2Structure& s);
Json to_json(const std::vector<RealSubmatrixReport>& reports);
Json to_json(const MuVerdict& v);
Json to_json(const ExclusionReport& r);
Json to_json(const std::vector<CensusRecord>& records);

/// {"d": n, "entries": [[{"re": r, "im": i}, ...], ...]}. Throws Parse,
/// NonSquare or NonFinite.
Matrix matrix_from_json(std::string_view text);
Matrix matrix_from_json_value(const Json& j);
EquivalenceWitness witness_from_json(std::string_view text);

std::string scan_csv(const std::vector<CensusRecord>& records);

}  // namespace chm::io
