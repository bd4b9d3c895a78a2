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

#include "chm/equivalence.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "chm/kernels.hpp"

namespace chm {

EquivalenceWitness EquivalenceWitness::identity(std::size_t d) {
    EquivalenceWitness w;
    w.rowPerm.resize(d);
    std::iota(w.rowPerm.begin(), w.rowPerm.end(), 1);
    w.colPerm = w.rowPerm;
    w.rowPhases.assign(d, Complex{1.0, 0.0});
    w.colPhases.assign(d, Complex{1.0, 0.0});
    return w;
}

Matrix dephase(const Matrix& m, Tolerance tol) {
    const std::size_t d = m.dim();
    for (std::size_t i = 0; i < d; ++i) {
        if (std::abs(m(i, 0)) < tol.eps() || std::abs(m(0, i)) < tol.eps()) {
            throw Error(ErrorKind::ZeroPivot, "dephase: vanishing entry in first row or column");
        }
    }
    Matrix out(d);
    const Complex corner = m(0, 0);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
            out(j, k) = (j == 0 || k == 0) ? Complex{1.0, 0.0} : m(j, k) * corner / (m(j, 0) * m(0, k));
        }
    }
    return out;
}

namespace {

void check_permutation(const std::vector<int>& perm, std::size_t d, const char* what) {
    if (perm.size() != d) {
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has wrong length");
    }
    std::vector<bool> seen(d, false);
    for (int p : perm) {
        if (p < 1 || static_cast<std::size_t>(p) > d || seen[p - 1]) {
            throw Error(ErrorKind::InvalidArgument, std::string(what) + " is not a permutation of 1..d");
        }
        seen[p - 1] = true;
    }
}

void check_phases(const std::vector<Complex>& phases, std::size_t d, Tolerance tol, const char* what) {
    if (phases.size() != d) {
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has wrong length");
    }
    for (const auto& z : phases) {
        if (!is_unimodular(z, tol).ok) {
            throw Error(ErrorKind::InvalidArgument, std::string(what) + " contains a non-unimodular phase");
        }
    }
}

// Sorted real and imaginary parts of all entries. Both multisets are invariant
// under the row/column permutations that keep the pivot in place.
struct EntryProfile {
    std::vector<double> re;
    std::vector<double> im;

    explicit EntryProfile(const Matrix& m) {
        for (const auto& z : m.entries()) {
            re.push_back(z.real());
            im.push_back(z.imag());
        }
        std::sort(re.begin(), re.end());
        std::sort(im.begin(), im.end());
    }

    bool close_to(const EntryProfile& other, double granularity) const {
        for (std::size_t i = 0; i < re.size(); ++i) {
            if (std::abs(re[i] - other.re[i]) > granularity) return false;
            if (std::abs(im[i] - other.im[i]) > granularity) return false;
        }
        return true;
    }
};

constexpr double kPrefilterGranularity = 1e-7;

Matrix dephase_at(const Matrix& m, std::size_t pivot_row, std::size_t pivot_col) {
    const std::size_t d = m.dim();
    Matrix out(d);
    const Complex corner = m(pivot_row, pivot_col);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
            out(j, k) = m(j, k) * corner / (m(j, pivot_col) * m(pivot_row, k));
        }
    }
    return out;
}

// Split column vectors of rows 1..d-1, one per column.
struct ColumnSet {
    std::size_t len = 0;
    std::vector<double> re;
    std::vector<double> im;

    std::span<const double> re_col(std::size_t k) const { return {re.data() + k * len, len}; }
    std::span<const double> im_col(std::size_t k) const { return {im.data() + k * len, len}; }
};

ColumnSet columns_below_first_row(const Matrix& m, const std::vector<std::size_t>& row_order) {
    const std::size_t d = m.dim();
    ColumnSet s;
    s.len = d - 1;
    s.re.resize(d * s.len);
    s.im.resize(d * s.len);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t j = 1; j < d; ++j) {
            const Complex z = m(row_order[j], k);
            s.re[k * s.len + j - 1] = z.real();
            s.im[k * s.len + j - 1] = z.imag();
        }
    }
    return s;
}

std::size_t factorial(std::size_t n) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

Matrix apply_witness(const Matrix& m, const EquivalenceWitness& w, Tolerance tol) {
    const std::size_t d = m.dim();
    check_permutation(w.rowPerm, d, "rowPerm");
    check_permutation(w.colPerm, d, "colPerm");
    check_phases(w.rowPhases, d, tol, "rowPhases");
    check_phases(w.colPhases, d, tol, "colPhases");
    Matrix out(d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
            out(j, k) = w.rowPhases[j] * m(w.rowPerm[j] - 1, w.colPerm[k] - 1) * w.colPhases[k];
        }
    }
    return out;
}

std::optional<EquivalenceWitness> are_equivalent(const Matrix& a, const Matrix& b,
                                                 const EquivalenceOptions& options) {
    if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "are_equivalent: dimensions differ");
    const std::size_t d = a.dim();
    if (d < 2 || d > 8) throw Error(ErrorKind::InvalidArgument, "are_equivalent supports 2 <= d <= 8");
    const Tolerance tol = options.tol;
    require_chm(a, tol, "first matrix");
    require_chm(b, tol, "second matrix");

    using Clock = std::chrono::steady_clock;
    const auto started = Clock::now();
    const auto& kern = kernels::active();

    std::vector<std::size_t> natural(d);
    std::iota(natural.begin(), natural.end(), std::size_t{0});

    const Matrix target = dephase(a, tol);
    const EntryProfile target_profile(target);
    const ColumnSet target_cols = columns_below_first_row(target, natural);

    std::vector<Matrix> pivoted;
    std::vector<bool> admissible(d * d, false);
    pivoted.reserve(d * d);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
            pivoted.push_back(dephase_at(b, r, c));
            admissible[r * d + c] = EntryProfile(pivoted.back()).close_to(target_profile, kPrefilterGranularity);
        }
    }

    const std::size_t total_row_perms = factorial(d);
    std::size_t row_perms_done = 0;

    std::vector<std::size_t> row_order(d);
    std::vector<std::size_t> col_order(d);
    std::vector<bool> used(d);
    std::vector<std::uint8_t> match(d * d);

    for (std::size_t r = 0; r < d; ++r) {
        bool any_pivot = false;
        for (std::size_t c = 0; c < d; ++c) any_pivot = any_pivot || admissible[r * d + c];
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < d; ++i)
            if (i != r) rest.push_back(i);
        if (!any_pivot) {
            row_perms_done += factorial(d - 1);
            continue;
        }
        do {
            if (options.timeout && Clock::now() - started > *options.timeout) {
                throw Error(ErrorKind::Timeout,
                            "equivalence search timed out after " + std::to_string(row_perms_done) + " of " +
                                std::to_string(total_row_perms) + " row permutations");
            }
            row_order[0] = r;
            std::copy(rest.begin(), rest.end(), row_order.begin() + 1);

            for (std::size_t c = 0; c < d; ++c) {
                if (!admissible[r * d + c]) continue;
                const ColumnSet cand = columns_below_first_row(pivoted[r * d + c], row_order);

                // match[k*d+m]: target column k equals candidate column m.
                for (std::size_t k = 1; k < d; ++k) {
                    for (std::size_t m = 0; m < d; ++m) {
                        match[k * d + m] =
                            m != c && kern.max_abs_diff(target_cols.re_col(k), target_cols.im_col(k),
                                                        cand.re_col(m), cand.im_col(m)) <= tol.eps();
                    }
                }

                std::fill(used.begin(), used.end(), false);
                col_order[0] = c;
                used[c] = true;
                std::optional<EquivalenceWitness> found;

                auto assign = [&](auto&& self, std::size_t k) -> bool {
                    if (k == d) {
                        EquivalenceWitness w;
                        for (std::size_t i = 0; i < d; ++i) {
                            w.rowPerm.push_back(static_cast<int>(row_order[i]) + 1);
                            w.colPerm.push_back(static_cast<int>(col_order[i]) + 1);
                        }
                        const Complex b00 = b(row_order[0], col_order[0]);
                        for (std::size_t j = 0; j < d; ++j) w.rowPhases.push_back(a(j, 0) / b(row_order[j], col_order[0]));
                        for (std::size_t kk = 0; kk < d; ++kk) {
                            w.colPhases.push_back(a(0, kk) * b00 / (a(0, 0) * b(row_order[0], col_order[kk])));
                        }
                        Matrix replay;
                        try {
                            replay = apply_witness(b, w, tol);
                        } catch (const Error&) {
                            return false;
                        }
                        if (max_entry_distance(replay, a) > tol.eps()) return false;
                        found = std::move(w);
                        return true;
                    }
                    for (std::size_t m = 0; m < d; ++m) {
                        if (used[m] || !match[k * d + m]) continue;
                        used[m] = true;
                        col_order[k] = m;
                        if (self(self, k + 1)) return true;
                        used[m] = false;
                    }
                    return false;
                };
                if (assign(assign, 1)) return found;
            }
            ++row_perms_done;
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    return std::nullopt;
}

int count_real_entries(const Matrix& m, Tolerance tol) {
    return static_cast<int>(std::count_if(m.entries().begin(), m.entries().end(),
                                          [&](const Complex& z) { return std::abs(z.imag()) <= tol.eps(); }));
}

std::vector<RealSubmatrixReport> real_submatrices_3x2(const Matrix& m, Tolerance tol) {
    const int d = static_cast<int>(m.dim());
    std::vector<RealSubmatrixReport> out;
    auto is_real = [&](int r, int c) { return std::abs(m(r, c).imag()) <= tol.eps(); };
    for (int r0 = 0; r0 < d; ++r0)
        for (int r1 = r0 + 1; r1 < d; ++r1)
            for (int r2 = r1 + 1; r2 < d; ++r2)
                for (int c0 = 0; c0 < d; ++c0)
                    for (int c1 = c0 + 1; c1 < d; ++c1) {
                        const std::array<int, 3> rows{r0, r1, r2};
                        bool all_real = true;
                        for (int r : rows) all_real = all_real && is_real(r, c0) && is_real(r, c1);
                        if (!all_real) continue;
                        double largest_minor = 0.0;
                        for (int i = 0; i < 3; ++i) {
                            for (int j = i + 1; j < 3; ++j) {
                                const double minor = m(rows[i], c0).real() * m(rows[j], c1).real() -
                                                     m(rows[i], c1).real() * m(rows[j], c0).real();
                                largest_minor = std::max(largest_minor, std::abs(minor));
                            }
                        }
                        out.push_back({{r0 + 1, r1 + 1, r2 + 1}, {c0 + 1, c1 + 1}, largest_minor > tol.eps() ? 2 : 1});
                    }
    return out;
}

}  // namespace chm
