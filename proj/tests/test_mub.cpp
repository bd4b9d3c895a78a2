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

#include "chm/families.hpp"
#include "chm/mub.hpp"
#include "oracles.hpp"

using chm::Matrix;

namespace {

const Matrix& named(const char* n) { return chm::named(n).matrix; }

}  // namespace

TEST_CASE("mu_pair examples") {
    const Matrix id2 = Matrix::identity(2);
    const Matrix f2{{1.0, 1.0}, {1.0, -1.0}};
    const auto qubit = chm::mu_pair(id2, f2);
    CHECK(qubit.ok);
    CHECK(qubit.maxDeviation <= 1e-15);

    const Matrix scaled_id{{2.0, 0.0}, {0.0, 2.0}};
    CHECK(chm::mu_pair(scaled_id, f2).ok);

    const auto same = chm::mu_pair(named("F6"), named("F6"));
    CHECK_FALSE(same.ok);
    CHECK(same.maxDeviation == doctest::Approx(6.0 - std::sqrt(6.0)).epsilon(1e-12));

    // Golden: F6^* D0 has an entry of modulus 6 (the all-ones first columns).
    const auto fd = chm::mu_pair(named("F6"), named("D0"));
    CHECK_FALSE(fd.ok);
    CHECK(fd.maxDeviation == doctest::Approx(6.0 - std::sqrt(6.0)).epsilon(1e-12));

    CHECK(chm::mu_pair(Matrix::identity(6), named("D0")).ok);
    CHECK(chm::mu_pair(Matrix::identity(6), named("M1")).ok);
}

TEST_CASE("mu_pair errors") {
    try {
        chm::mu_pair(Matrix::identity(2), named("F6"));
        FAIL("expected DimensionMismatch");
    } catch (const chm::Error& e) {
        CHECK(e.kind() == chm::ErrorKind::DimensionMismatch);
    }
    const Matrix ones(2, std::vector<chm::Complex>(4, 1.0));
    try {
        chm::mu_pair(ones, Matrix::identity(2));
        FAIL("expected NotBasis");
    } catch (const chm::Error& e) {
        CHECK(e.kind() == chm::ErrorKind::NotBasis);
    }
}

TEST_CASE("mu_set") {
    const Matrix f2{{1.0, 1.0}, {1.0, -1.0}};
    CHECK(chm::mu_set({Matrix::identity(2), f2}).ok);
    CHECK_FALSE(chm::mu_set({named("F6"), named("F6")}).ok);
    const auto single = chm::mu_set({named("F6")});
    CHECK(single.ok);
    CHECK(single.maxDeviation == 0.0);
    // Qubit: computational, Hadamard and the circular basis are a complete set.
    const chm::Complex i{0.0, 1.0};
    const Matrix circ{{1.0, 1.0}, {i, -i}};
    CHECK(chm::mu_set({Matrix::identity(2), f2, circ}).ok);
}

TEST_CASE("mu_pair symmetry and invariance under column transforms") {
    std::mt19937_64 rng(41);
    const Matrix& f = named("F6");
    const Matrix id = Matrix::identity(6);
    for (int t = 0; t < 50; ++t) {
        chm::EquivalenceWitness w = oracle::random_witness(6, rng);
        // Right action only: keep rows and row phases fixed.
        w.rowPerm = {1, 2, 3, 4, 5, 6};
        w.rowPhases.assign(6, 1.0);
        const Matrix g = chm::apply_witness(named("D0"), w);
        CHECK(chm::mu_pair(f, g).ok == chm::mu_pair(f, named("D0")).ok);
        CHECK(chm::mu_pair(id, g).ok);
        CHECK(chm::mu_pair(g, id).ok == chm::mu_pair(id, g).ok);
        CHECK(chm::mu_pair(f, g).ok == chm::mu_pair(g, f).ok);
    }
}

TEST_CASE("exclusion report: M2 variants") {
    for (const char* n : {"M2_w1", "M2_w2"}) {
        const auto r = chm::exclusion_report(named(n));
        CHECK(r.excluded());
        const auto* r1 = r.find("R1");
        REQUIRE(r1 != nullptr);
        CHECK(r1->realCount->count == 24);
        const auto* r2 = r.find("R2");
        REQUIRE(r2 != nullptr);
        CHECK(r2->subChm->location == chm::SubmatrixLoc{{1, 3, 5}, {1, 3, 5}});
        CHECK(r.find("R3") == nullptr);
        CHECK(r.find("R4") == nullptr);
    }
}

TEST_CASE("exclusion report: M1 fires R1 and R3 with a replayable witness") {
    const auto r = chm::exclusion_report(named("M1"));
    CHECK(r.excluded());
    REQUIRE(r.find("R1") != nullptr);
    CHECK(r.find("R1")->realCount->count == 30);
    CHECK(r.find("R2") == nullptr);
    const auto* r3 = r.find("R3");
    REQUIRE(r3 != nullptr);
    const Matrix replay = chm::apply_witness(named("D0"), r3->d0Witness->witness);
    CHECK(chm::max_entry_distance(replay, named("M1")) <= 1e-9);
    CHECK(r3->d0Witness->maxError <= 1e-9);
}

TEST_CASE("exclusion report: the family point is not excluded") {
    const Matrix h = chm::family_h(chm::FamilyPoint(1.0, 0.5));
    const auto r = chm::exclusion_report(h);
    CHECK(r.rulesFired.empty());
    CHECK_FALSE(r.excluded());
}

TEST_CASE("exclusion evidence replays") {
    for (const auto& e : chm::registry()) {
        const auto r = chm::exclusion_report(e.matrix);
        for (const auto& rule : r.rulesFired) {
            if (rule.realCount) CHECK(chm::count_real_entries(e.matrix) == rule.realCount->count);
            if (rule.subChm) CHECK(chm::sub_chm_3x3_residual(e.matrix, rule.subChm->location) <= 3e-9);
            if (rule.d0Witness) {
                CHECK(chm::max_entry_distance(chm::apply_witness(named("D0"), rule.d0Witness->witness), e.matrix) <=
                      1e-9);
            }
        }
    }
    CHECK(chm::exclusion_report(named("D0")).find("R3") != nullptr);
}

TEST_CASE("census anomaly rule") {
    const chm::H2Structure s{{{1, 2}, {3, 4}, {5, 6}}, {{1, 2}, {3, 4}, {5, 6}}};
    CHECK_FALSE(chm::census_anomaly_rule(17, s).has_value());
    CHECK_FALSE(chm::census_anomaly_rule(12, std::nullopt).has_value());
    const auto fired = chm::census_anomaly_rule(12, s);
    REQUIRE(fired.has_value());
    CHECK(fired->id == "R4");
    CHECK_FALSE(fired->exclusion);
    CHECK(fired->censusAnomaly->count == 12);
}

TEST_CASE("exclusion report rejects non-CHM input") {
    CHECK_THROWS_AS(chm::exclusion_report(Matrix(6, std::vector<chm::Complex>(36, 1.0))), chm::Error);
}
