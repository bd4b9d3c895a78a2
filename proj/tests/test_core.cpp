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

#include <cmath>
#include <limits>
#include <random>

#include "chm/core.hpp"
#include "chm/equivalence.hpp"
#include "chm/families.hpp"
#include "oracles.hpp"

using chm::Complex;
using chm::Matrix;
using chm::Tolerance;

namespace {

Matrix all_ones(std::size_t d) {
    return Matrix(d, std::vector<Complex>(d * d, Complex{1.0, 0.0}));
}

}  // namespace

TEST_CASE("is_unimodular") {
    const auto one = chm::is_unimodular({1.0, 0.0});
    CHECK(one.ok);
    CHECK(one.residual == 0.0);

    const auto omega = chm::is_unimodular({-0.5, std::sqrt(3.0) / 2.0});
    CHECK(omega.ok);

    const auto off = chm::is_unimodular({1.0, 1.0});
    CHECK_FALSE(off.ok);
    CHECK(off.residual == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-15));
}

TEST_CASE("tolerance range is enforced") {
    CHECK(Tolerance().eps() == 1e-9);
    CHECK_THROWS_AS(Tolerance(0.0), chm::Error);
    CHECK_THROWS_AS(Tolerance(-1e-9), chm::Error);
    CHECK_THROWS_AS(Tolerance(1e-3), chm::Error);
    CHECK_NOTHROW(Tolerance(9.9e-4));
}

TEST_CASE("matrix construction rejects bad input") {
    CHECK_THROWS_AS(Matrix(2, std::vector<Complex>(3)), chm::Error);
    try {
        Matrix(1, {Complex{std::numeric_limits<double>::quiet_NaN(), 0.0}});
        FAIL("expected NonFinite");
    } catch (const chm::Error& e) {
        CHECK(e.kind() == chm::ErrorKind::NonFinite);
    }
    try {
        Matrix({{1.0, 1.0}, {1.0}});
        FAIL("expected NonSquare");
    } catch (const chm::Error& e) {
        CHECK(e.kind() == chm::ErrorKind::NonSquare);
    }
}

TEST_CASE("is_chm on registry and controls") {
    CHECK(chm::is_chm(chm::named("D0").matrix).ok);
    CHECK(chm::is_chm(chm::fourier(6)).ok);
    const auto ones = chm::is_chm(all_ones(6));
    CHECK_FALSE(ones.ok);
    CHECK(ones.residual == doctest::Approx(1.0));  // 6 / d
    CHECK_FALSE(chm::is_chm(Matrix::identity(6)).ok);
}

TEST_CASE("gram_residual examples") {
    CHECK(chm::gram_residual(chm::fourier(6)) <= 1e-12);
    CHECK(chm::gram_residual(Matrix::identity(6)) == doctest::Approx(5.0));
    CHECK(chm::gram_residual(all_ones(6)) == doctest::Approx(6.0));
    CHECK(chm::gram_residual(chm::fourier(6)) == doctest::Approx(oracle::gram_residual(chm::fourier(6))).epsilon(1e-3));
}

TEST_CASE("row and column orthogonality duality") {
    std::mt19937_64 rng(11);
    // Residuals of M and M^* differ off the CHM locus, but vanish together.
    for (int t = 0; t < 50; ++t) {
        const Matrix m = chm::apply_witness(chm::fourier(6), oracle::random_witness(6, rng));
        CHECK(chm::gram_residual(m) <= 1e-12);
        CHECK(chm::gram_residual(m.adjoint()) <= 1e-12);
        const Matrix r = oracle::random_unimodular(6, rng);
        CHECK(chm::gram_residual(r) > 1e-3);
        CHECK(chm::gram_residual(r.adjoint()) > 1e-3);
    }
    const Matrix f = chm::fourier(6);
    CHECK(std::abs(chm::gram_residual(f) - chm::gram_residual(f.adjoint())) <= 1e-12);
}

TEST_CASE("is_chm is invariant under permutations and phases") {
    std::mt19937_64 rng(2024);
    const Matrix f = chm::fourier(6);
    for (int t = 0; t < 100; ++t) {
        const Matrix g = chm::apply_witness(f, oracle::random_witness(6, rng));
        CHECK(chm::is_chm(g).ok);
    }
}

TEST_CASE("tolerance monotonicity") {
    std::mt19937_64 rng(5);
    const Matrix base = chm::family_h(chm::FamilyPoint(0.7, -0.2));
    for (double eps : {1e-15, 1e-13, 1e-11, 1e-9, 1e-7}) {
        if (!chm::is_chm(base, Tolerance(eps)).ok) continue;
        for (double larger : {eps * 2, eps * 10, 9e-4}) CHECK(chm::is_chm(base, Tolerance(larger)).ok);
    }
    Matrix perturbed = chm::fourier(6);
    perturbed(2, 3) *= std::polar(1.0, 3e-6);
    CHECK_FALSE(chm::is_chm(perturbed, Tolerance(1e-9)).ok);
    CHECK(chm::is_chm(perturbed, Tolerance(1e-5)).ok);
}
