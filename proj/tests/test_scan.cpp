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

#include <doctest.h>

#include <map>

#include "chm/families.hpp"
#include "chm/json_io.hpp"
#include "chm/scan.hpp"

TEST_CASE("grid coordinates respect the half-open domain") {
    CHECK(chm::grid_coordinate(8, 8) == chm::kHalfPi);
    CHECK(chm::grid_coordinate(4, 8) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(chm::grid_coordinate(1, 2) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(chm::grid_coordinate(1, 64) > -chm::kHalfPi);
}

TEST_CASE("smallest grid") {
    chm::ScanConfig cfg;
    cfg.gridN = 2;
    const auto rows = chm::run_scan(cfg);
    REQUIRE(rows.size() == 4);
    // (0,0), (0,pi/2), (pi/2,0), corner
    CHECK(rows[0].N == 45);
    CHECK(rows[1].N == 33);
    CHECK(rows[2].N == 33);
    CHECK(rows[3].limit);
    CHECK(rows[3].N == 75);
    for (const auto& r : rows) CHECK_FALSE(r.forbidden);
}

TEST_CASE("grid of eight") {
    chm::ScanConfig cfg;
    cfg.gridN = 8;
    const auto rows = chm::run_scan(cfg);
    REQUIRE(rows.size() == 64);
    std::map<int, int> histogram;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        CHECK(r.x1 == chm::grid_coordinate(static_cast<int>(i / 8) + 1, 8));
        CHECK(r.x2 == chm::grid_coordinate(static_cast<int>(i % 8) + 1, 8));
        CHECK(r.N >= 9);
        CHECK(r.h2Found);
        CHECK(r.forbidden == !chm::forbidden_count_check(r.N));
        CHECK(r.gramResidual < 1e-12);
        if (!r.limit) ++histogram[r.N];
    }
    // Interior points give 17, the axes x1 = 0 or x2 = 0 give 33, the origin 45.
    CHECK(histogram == std::map<int, int>{{17, 48}, {33, 14}, {45, 1}});
    const auto s = chm::summarize(rows);
    CHECK(s.rows == 64);
    CHECK(s.minN == 17);
    CHECK(s.maxN == 75);
    CHECK(s.forbiddenCount == 0);
}

TEST_CASE("scan output does not depend on the worker count") {
    chm::ScanConfig one;
    one.gridN = 12;
    one.threads = 1;
    chm::ScanConfig many = one;
    many.threads = 7;
    const auto a = chm::io::scan_csv(chm::run_scan(one));
    const auto b = chm::io::scan_csv(chm::run_scan(many));
    CHECK(a == b);
    CHECK(a.rfind("x1,x2,N,gram_residual,h2_found,forbidden\n", 0) == 0);
    CHECK(std::count(a.begin(), a.end(), '\n') == 1 + 144);
}

TEST_CASE("scan rejects degenerate grids") {
    chm::ScanConfig cfg;
    cfg.gridN = 1;
    CHECK_THROWS_AS(chm::run_scan(cfg), chm::Error);
}
