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

#include "chm/census.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chm/kernels.hpp"

namespace chm {

namespace {

std::vector<std::pair<int, int>> index_pairs(int d) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) out.emplace_back(i, j);
    return out;
}

void require_unimodular_entries(const Matrix& m, Tolerance tol) {
    for (const auto& z : m.entries()) {
        if (!is_unimodular(z, tol).ok) throw Error(ErrorKind::NotUnimodular, "matrix has a non-unimodular entry");
    }
}

void check_oracle_agreement(double sum_residual, double orth_residual, Tolerance tol) {
    if (std::abs(sum_residual - orth_residual) > 10.0 * tol.eps()) {
        throw Error(ErrorKind::Internal, "2x2 sub-CHM predicates disagree: " + std::to_string(sum_residual) +
                                             " vs " + std::to_string(orth_residual));
    }
}

// Residuals |a d + b c| for every (row pair, column pair), row pairs outer.
struct QuadTable {
    std::vector<std::pair<int, int>> pairs;
    std::vector<double> residual;

    QuadTable(const Matrix& m, Tolerance tol) : pairs(index_pairs(static_cast<int>(m.dim()))) {
        kernels::QuadBatch batch;
        batch.reserve(pairs.size() * pairs.size());
        for (const auto& [r0, r1] : pairs) {
            for (const auto& [c0, c1] : pairs) batch.push(m(r0, c0), m(r0, c1), m(r1, c0), m(r1, c1));
        }
        residual.resize(batch.size());
        std::vector<double> orth(batch.size());
        kernels::active().quad_residuals(batch, residual, orth);
        for (std::size_t i = 0; i < residual.size(); ++i) check_oracle_agreement(residual[i], orth[i], tol);
    }

    std::size_t index(int r0, int r1, int c0, int c1) const {
        auto pos = [&](int x, int y) {
            return static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), std::pair{x, y}) - pairs.begin());
        };
        return pos(r0, r1) * pairs.size() + pos(c0, c1);
    }
};

std::vector<Pairing> build_matchings(std::vector<int> items) {
    if (items.empty()) return {Pairing{}};
    std::vector<Pairing> out;
    const int first = items.front();
    for (std::size_t i = 1; i < items.size(); ++i) {
        std::vector<int> rest;
        for (std::size_t j = 1; j < items.size(); ++j)
            if (j != i) rest.push_back(items[j]);
        for (auto& tail : build_matchings(rest)) {
            Pairing p{{first, items[i]}};
            p.insert(p.end(), tail.begin(), tail.end());
            out.push_back(std::move(p));
        }
    }
    return out;
}

}  // namespace

CheckResult is_sub_chm_2x2(Complex a, Complex b, Complex c, Complex d, Tolerance tol) {
    for (const auto& z : {a, b, c, d}) {
        if (!is_unimodular(z, tol).ok) throw Error(ErrorKind::NotUnimodular, "2x2 entry is not unimodular");
    }
    kernels::QuadBatch batch;
    batch.push(a, b, c, d);
    double sum = 0.0, orth = 0.0;
    kernels::active().quad_residuals(batch, {&sum, 1}, {&orth, 1});
    check_oracle_agreement(sum, orth, tol);
    return {sum <= tol.eps(), sum};
}

CensusResult census_2x2(const Matrix& m, Tolerance tol) {
    require_chm(m, tol, "census input");
    const QuadTable table(m, tol);
    CensusResult out;
    std::size_t i = 0;
    for (const auto& [r0, r1] : table.pairs) {
        for (const auto& [c0, c1] : table.pairs) {
            if (table.residual[i++] <= tol.eps()) out.locations.push_back({{r0 + 1, r1 + 1}, {c0 + 1, c1 + 1}});
        }
    }
    out.count = static_cast<int>(out.locations.size());
    return out;
}

double sub_chm_3x3_residual(const Matrix& m, const SubmatrixLoc& loc) {
    if (loc.rows.size() != 3 || loc.cols.size() != 3) {
        throw Error(ErrorKind::InvalidArgument, "3x3 location needs three rows and three columns");
    }
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            Complex ip{0.0, 0.0};
            for (int c : loc.cols) ip += m(loc.rows[i] - 1, c - 1) * std::conj(m(loc.rows[j] - 1, c - 1));
            worst = std::max(worst, std::abs(ip));
        }
    }
    return worst;
}

std::vector<SubmatrixLoc> find_3x3_sub_chms(const Matrix& m, Tolerance tol) {
    require_unimodular_entries(m, tol);
    const int d = static_cast<int>(m.dim());
    std::vector<std::vector<int>> triples;
    for (int a = 1; a <= d; ++a)
        for (int b = a + 1; b <= d; ++b)
            for (int c = b + 1; c <= d; ++c) triples.push_back({a, b, c});
    std::vector<SubmatrixLoc> out;
    for (const auto& rows : triples) {
        for (const auto& cols : triples) {
            SubmatrixLoc loc{rows, cols};
            if (sub_chm_3x3_residual(m, loc) <= 3.0 * tol.eps()) out.push_back(std::move(loc));
        }
    }
    return out;
}

const std::vector<Pairing>& perfect_matchings_of_six() {
    static const std::vector<Pairing> matchings = build_matchings({1, 2, 3, 4, 5, 6});
    return matchings;
}

std::optional<H2Structure> h2_block_structure(const Matrix& m, Tolerance tol) {
    if (m.dim() != 6) throw Error(ErrorKind::InvalidArgument, "H2 block structure is defined for 6x6 matrices");
    require_chm(m, tol, "H2 input");
    const QuadTable table(m, tol);
    for (const auto& rows : perfect_matchings_of_six()) {
        for (const auto& cols : perfect_matchings_of_six()) {
            bool all_blocks = true;
            for (const auto& [r0, r1] : rows) {
                for (const auto& [c0, c1] : cols) {
                    all_blocks = all_blocks && table.residual[table.index(r0 - 1, r1 - 1, c0 - 1, c1 - 1)] <= tol.eps();
                }
            }
            if (all_blocks) return H2Structure{rows, cols};
        }
    }
    return std::nullopt;
}

bool forbidden_count_check(int n) {
    return !((n >= 10 && n <= 16) || n == 18);
}

}  // namespace chm
