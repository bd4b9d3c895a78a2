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

#include "chm/mub.hpp"

#include <algorithm>
#include <cmath>

#include "chm/families.hpp"

namespace chm {

namespace {

// Columns divided by their norms, after checking they form an orthogonal
// basis with equal column norms.
Matrix normalised_basis(const Matrix& m, Tolerance tol) {
    const std::size_t d = m.dim();
    std::vector<double> norms(d);
    for (std::size_t k = 0; k < d; ++k) {
        double s = 0.0;
        for (std::size_t j = 0; j < d; ++j) s += std::norm(m(j, k));
        norms[k] = std::sqrt(s);
    }
    const double reference = norms[0];
    if (!(reference > 0.0)) throw Error(ErrorKind::NotBasis, "basis has a zero column");
    for (std::size_t k = 0; k < d; ++k) {
        if (std::abs(norms[k] - reference) > tol.eps() * reference) {
            throw Error(ErrorKind::NotBasis, "basis columns have unequal norms");
        }
    }
    Matrix out(d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) out(j, k) = m(j, k) / norms[k];
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = k + 1; l < d; ++l) {
            Complex ip{0.0, 0.0};
            for (std::size_t j = 0; j < d; ++j) ip += std::conj(out(j, k)) * out(j, l);
            if (std::abs(ip) > tol.eps()) throw Error(ErrorKind::NotBasis, "basis columns are not orthogonal");
        }
    }
    return out;
}

}  // namespace

MuVerdict mu_pair(const Matrix& f, const Matrix& g, Tolerance tol) {
    if (f.dim() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "mu_pair: dimensions differ");
    const std::size_t d = f.dim();
    const Matrix fn = normalised_basis(f, tol);
    const Matrix gn = normalised_basis(g, tol);
    const double target = 1.0 / std::sqrt(static_cast<double>(d));
    double worst = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
            Complex ip{0.0, 0.0};
            for (std::size_t r = 0; r < d; ++r) ip += std::conj(fn(r, j)) * gn(r, k);
            worst = std::max(worst, std::abs(std::abs(ip) - target));
        }
    }
    const double deviation = worst * static_cast<double>(d);
    return {deviation <= tol.eps() * std::sqrt(static_cast<double>(d)), deviation};
}

MuVerdict mu_set(const std::vector<Matrix>& bases, Tolerance tol) {
    MuVerdict out{true, 0.0};
    for (std::size_t i = 0; i < bases.size(); ++i) {
        for (std::size_t j = i + 1; j < bases.size(); ++j) {
            const MuVerdict v = mu_pair(bases[i], bases[j], tol);
            out.ok = out.ok && v.ok;
            out.maxDeviation = std::max(out.maxDeviation, v.maxDeviation);
        }
    }
    return out;
}

bool ExclusionReport::excluded() const {
    return std::any_of(rulesFired.begin(), rulesFired.end(), [](const FiredRule& r) { return r.exclusion; });
}

const FiredRule* ExclusionReport::find(const std::string& id) const {
    for (const auto& r : rulesFired)
        if (r.id == id) return &r;
    return nullptr;
}

std::optional<FiredRule> census_anomaly_rule(int count, const std::optional<H2Structure>& structure) {
    if (!structure || forbidden_count_check(count)) return std::nullopt;
    FiredRule rule;
    rule.id = "R4";
    rule.exclusion = false;
    rule.censusAnomaly = CensusAnomalyEvidence{count, *structure};
    return rule;
}

ExclusionReport exclusion_report(const Matrix& h, Tolerance tol) {
    if (h.dim() != 6) throw Error(ErrorKind::InvalidArgument, "exclusion rules apply to 6x6 matrices");
    require_chm(h, tol, "exclusion input");
    ExclusionReport report;

    const int reals = count_real_entries(h, tol);
    if (reals > kRealEntryExclusionThreshold) {
        FiredRule rule;
        rule.id = "R1";
        rule.realCount = RealCountEvidence{reals, kRealEntryExclusionThreshold};
        report.rulesFired.push_back(std::move(rule));
    }

    const auto subs = find_3x3_sub_chms(h, tol);
    if (!subs.empty()) {
        FiredRule rule;
        rule.id = "R2";
        rule.subChm = SubChm3x3Evidence{subs.front(), sub_chm_3x3_residual(h, subs.front())};
        report.rulesFired.push_back(std::move(rule));
    }

    const Matrix& d0 = named("D0").matrix;
    EquivalenceOptions options;
    options.tol = tol;
    if (auto witness = are_equivalent(h, d0, options)) {
        FiredRule rule;
        rule.id = "R3";
        const double err = max_entry_distance(apply_witness(d0, *witness, tol), h);
        rule.d0Witness = D0WitnessEvidence{std::move(*witness), err};
        report.rulesFired.push_back(std::move(rule));
    }

    const auto census = census_2x2(h, tol);
    if (auto rule = census_anomaly_rule(census.count, h2_block_structure(h, tol))) {
        report.rulesFired.push_back(std::move(*rule));
    }
    return report;
}

}  // namespace chm
