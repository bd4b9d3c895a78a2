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

#include <random>
#include <set>

#include "chm/census.hpp"
#include "chm/equivalence.hpp"
#include "chm/families.hpp"
#include "oracles.hpp"

using chm::Complex;
using chm::Matrix;
using chm::Pairing;

namespace {

const Pairing kNatural{{1, 2}, {3, 4}, {5, 6}};

const Matrix& named(const char* n) { return chm::named(n).matrix; }

}  // namespace

TEST_CASE("is_sub_chm_2x2 examples") {
    CHECK(chm::is_sub_chm_2x2(1.0, 1.0, 1.0, -1.0).ok);
    const Complex i{0.0, 1.0};
    CHECK(chm::is_sub_chm_2x2(i, 1.0, 1.0, i).ok);
    const auto ones = chm::is_sub_chm_2x2(1.0, 1.0, 1.0, 1.0);
    CHECK_FALSE(ones.ok);
    CHECK(ones.residual == doctest::Approx(2.0));
    try {
        chm::is_sub_chm_2x2(2.0, 1.0, 1.0, 1.0);
        FAIL("expected NotUnimodular");
    } catch (const chm::Error& e) {
        CHECK(e.kind() == chm::ErrorKind::NotUnimodular);
    }
}

TEST_CASE("the two 2x2 predicates agree on random unimodular quadruples") {
    std::mt19937_64 rng(1234);
    const chm::Tolerance tol(1e-9);
    int agree = 0;
    for (int t = 0; t < 100000; ++t) {
        const Complex a = oracle::random_phase(rng), b = oracle::random_phase(rng), c = oracle::random_phase(rng);
        // Every fourth sample is forced onto the sub-CHM variety d = -b c / a.
        const Complex d = (t % 4 == 0) ? -b * c / a : oracle::random_phase(rng);
        const auto r = chm::is_sub_chm_2x2(a, b, c, d, tol);
        const double orth = std::abs(a * std::conj(c) + b * std::conj(d));
        agree += (r.ok == (orth <= tol.eps())) ? 1 : 0;
    }
    CHECK(agree == 100000);
}

TEST_CASE("census_2x2 golden counts") {
    const Matrix h = chm::family_h(chm::FamilyPoint(1.0, 0.5));
    const auto c = chm::census_2x2(h);
    CHECK(c.count == 17);
    CHECK(c.count == static_cast<int>(c.locations.size()));
    CHECK(std::is_sorted(c.locations.begin(), c.locations.end()));
    CHECK(oracle::census_by_orthogonality(h, 1e-9) == 17);

    CHECK(chm::census_2x2(named("F6")).count == 45);
    CHECK(oracle::fourier6_census_analytic() == 45);
    CHECK(oracle::census_by_orthogonality(named("F6"), 1e-9) == 45);

    CHECK(chm::census_2x2(named("S6")).count == 0);
    CHECK(oracle::census_by_orthogonality(named("S6"), 1e-9) == 0);

    CHECK(chm::census_2x2(named("M1")).count == 75);
    CHECK(chm::census_2x2(named("D0")).count == 75);
    CHECK(chm::census_2x2(named("M2_w1")).count == 45);
    CHECK(chm::census_2x2(named("M2_w2")).count == 45);
}

TEST_CASE("S6 entries are cube roots of unity, so no 2x2 sub-CHM can exist") {
    // a d + b c = 0 would need two cube roots of unity summing to zero.
    for (const auto& z : named("S6").entries()) CHECK(std::abs(z * z * z - 1.0) <= 1e-12);
    const Complex w = std::polar(1.0, 2.0 * chm::kPi / 3.0);
    const Complex roots[3] = {1.0, w, w * w};
    for (const auto& p : roots)
        for (const auto& q : roots) CHECK(std::abs(p + q) > 0.9);
}

TEST_CASE("census rejects non-CHM input") {
    try {
        chm::census_2x2(Matrix(6, std::vector<Complex>(36, 1.0)));
        FAIL("expected NotCHM");
    } catch (const chm::Error& e) {
        CHECK(e.kind() == chm::ErrorKind::NotChm);
    }
}

TEST_CASE("census count is invariant under equivalence") {
    std::mt19937_64 rng(55);
    const Matrix h = chm::family_h(chm::FamilyPoint(1.0, 0.5));
    for (int t = 0; t < 100; ++t) {
        CHECK(chm::census_2x2(chm::apply_witness(h, oracle::random_witness(6, rng))).count == 17);
    }
}

TEST_CASE("find_3x3_sub_chms") {
    for (const char* n : {"M2_w1", "M2_w2"}) {
        const auto locs = chm::find_3x3_sub_chms(named(n));
        const chm::SubmatrixLoc want{{1, 3, 5}, {1, 3, 5}};
        CHECK(std::find(locs.begin(), locs.end(), want) != locs.end());
        CHECK(locs.size() == 28);
        CHECK(chm::sub_chm_3x3_residual(named(n), want) < 1e-12);
    }
    CHECK(chm::find_3x3_sub_chms(named("D0")).empty());
    CHECK(chm::find_3x3_sub_chms(named("M1")).empty());
    CHECK(chm::find_3x3_sub_chms(named("F6")).size() == 28);
    CHECK(chm::find_3x3_sub_chms(named("S6")).size() == 40);
    CHECK(chm::find_3x3_sub_chms(Matrix(6, std::vector<Complex>(36, 1.0))).empty());
}

TEST_CASE("3x3 locations transpose with the matrix") {
    for (const char* n : {"M2_w1", "M2_w2", "F6", "S6", "D0"}) {
        const Matrix& m = named(n);
        std::set<chm::SubmatrixLoc> swapped;
        for (const auto& l : chm::find_3x3_sub_chms(m)) swapped.insert({l.cols, l.rows});
        const auto t = chm::find_3x3_sub_chms(m.transpose());
        CHECK(std::set<chm::SubmatrixLoc>(t.begin(), t.end()) == swapped);
    }
}

TEST_CASE("perfect matchings of six") {
    const auto& pm = chm::perfect_matchings_of_six();
    CHECK(pm.size() == 15);
    CHECK(pm.front() == kNatural);
    CHECK(std::is_sorted(pm.begin(), pm.end()));
}

TEST_CASE("h2_block_structure") {
    for (double x1 : {-1.2, 0.0, 0.4, 1.0, chm::kHalfPi}) {
        for (double x2 : {-0.9, 0.0, 0.5, 1.3}) {
            const auto s = chm::h2_block_structure(chm::family_h(chm::FamilyPoint(x1, x2)));
            REQUIRE(s.has_value());
            CHECK(s->rowPairing == kNatural);
            CHECK(s->colPairing == kNatural);
        }
    }
    const auto f6 = chm::h2_block_structure(named("F6"));
    REQUIRE(f6.has_value());
    CHECK(f6->rowPairing == kNatural);
    CHECK(f6->colPairing == Pairing{{1, 4}, {2, 5}, {3, 6}});
    // Pairing rows and columns both at distance three is also valid for F6;
    // the detector just reports the lexicographically first pair.
    {
        const Pairing d3{{1, 4}, {2, 5}, {3, 6}};
        const Matrix& f = named("F6");
        for (const auto& [r1, r2] : d3) {
            for (const auto& [c1, c2] : d3) {
                CHECK(chm::is_sub_chm_2x2(f(r1 - 1, c1 - 1), f(r1 - 1, c2 - 1), f(r2 - 1, c1 - 1),
                                          f(r2 - 1, c2 - 1))
                          .ok);
            }
        }
    }

    const auto m1 = chm::h2_block_structure(named("M1"));
    REQUIRE(m1.has_value());
    CHECK(m1->rowPairing == Pairing{{1, 2}, {3, 5}, {4, 6}});
    CHECK(m1->colPairing == Pairing{{1, 2}, {3, 5}, {4, 6}});

    CHECK_FALSE(chm::h2_block_structure(named("S6")).has_value());
}

TEST_CASE("an H2 structure implies at least nine sub-CHMs") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> x(-chm::kHalfPi + 1e-6, chm::kHalfPi);
    for (int t = 0; t < 200; ++t) {
        const Matrix h = chm::family_h(chm::FamilyPoint(x(rng), x(rng)));
        if (chm::h2_block_structure(h)) CHECK(chm::census_2x2(h).count >= 9);
    }
}

TEST_CASE("forbidden_count_check") {
    CHECK(chm::forbidden_count_check(17));
    CHECK(chm::forbidden_count_check(9));
    CHECK_FALSE(chm::forbidden_count_check(12));
    for (int n = 0; n <= 225; ++n) {
        const bool forbidden = (n >= 10 && n <= 16) || n == 18;
        CHECK(chm::forbidden_count_check(n) == !forbidden);
    }
}
