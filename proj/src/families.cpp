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

#include "chm/families.hpp"

#include <cmath>

namespace chm {

namespace {

constexpr double kDenominatorFloor = 1e-12;
constexpr double kRadicandClamp = 1e-12;
constexpr double kBoundarySlop = 1e-12;

const Complex kI{0.0, 1.0};

void require_closed_square(double x1, double x2) {
    const double limit = kHalfPi + kBoundarySlop;
    if (!std::isfinite(x1) || !std::isfinite(x2) || std::abs(x1) > limit || std::abs(x2) > limit) {
        throw Error(ErrorKind::Domain, "f arguments must lie in [-pi/2, pi/2]");
    }
}

Complex sqrt_factor(double denominator) {
    if (!(denominator > kDenominatorFloor)) {
        throw Error(ErrorKind::Domain, "f: 1 + sin(x1) sin(x2) vanishes");
    }
    double radicand = 1.0 / denominator - 0.25;
    if (radicand < 0.0) {
        if (radicand < -kRadicandClamp) throw Error(ErrorKind::Domain, "f: negative radicand");
        radicand = 0.0;
    }
    return Complex{0.5, std::sqrt(radicand)};
}

// Exact sixth roots of unity, indexed by exponent mod 6.
Complex sixth_root(long exponent) {
    static const double h = std::sqrt(3.0) / 2.0;
    static const Complex roots[6] = {{1.0, 0.0}, {0.5, h}, {-0.5, h}, {-1.0, 0.0}, {-0.5, -h}, {0.5, -h}};
    return roots[((exponent % 6) + 6) % 6];
}

}  // namespace

FamilyPoint::FamilyPoint(double x1, double x2) : x1_(x1), x2_(x2) {
    for (double x : {x1, x2}) {
        if (!std::isfinite(x) || x <= -kHalfPi + kOpenEndMargin || x > kHalfPi + kBoundarySlop) {
            throw Error(ErrorKind::Domain, "family parameters must lie in (-pi/2, pi/2]");
        }
    }
}

Complex f_factor(double x1, double x2) {
    require_closed_square(x1, x2);
    const double half_sum = (x1 + x2) / 2.0;
    const double half_diff = (x1 - x2) / 2.0;
    const Complex middle{std::cos(half_diff), -std::sin(half_sum)};
    // |middle|^2 = cos^2((x1-x2)/2) + sin^2((x1+x2)/2) = 1 + sin x1 sin x2
    const double denominator = std::norm(middle);
    return std::polar(1.0, half_sum) * middle * sqrt_factor(denominator);
}

Complex f_factor_alt(double x1, double x2) {
    require_closed_square(x1, x2);
    const Complex z1 = std::polar(1.0, x1);
    const Complex z2 = std::polar(1.0, x2);
    const Complex lead = 1.0 - 0.5 * (1.0 - z1) * (1.0 - z2);
    const Complex denominator = 1.0 - 0.25 * (z1 - std::conj(z1)) * (z2 - std::conj(z2));
    return lead * sqrt_factor(denominator.real());
}

Matrix assemble_family(Complex z1, Complex z2, Complex f1, Complex f2, Complex f3, Complex f4) {
    using std::conj;
    const Complex one{1.0, 0.0};
    return Matrix{
        {one, one, one, one, one, one},
        {one, -one, z1, -z1, z1, -z1},
        {one, z2, -f1, -z2 * f2, -conj(f3), -z2 * conj(f4)},
        {one, -z2, -z1 * conj(f2), z1 * z2 * conj(f1), -z1 * f4, z1 * z2 * f3},
        {one, z2, -conj(f3), -z2 * conj(f4), -f1, -z2 * f2},
        {one, -z2, -z1 * f4, z1 * z2 * f3, -z1 * conj(f2), z1 * z2 * conj(f1)},
    };
}

Matrix family_h(const FamilyPoint& p) {
    const double x1 = p.x1(), x2 = p.x2();
    return assemble_family(std::polar(1.0, x1), std::polar(1.0, x2), f_factor(x1, x2), f_factor(x1, -x2),
                           f_factor(-x1, -x2), f_factor(-x1, x2));
}

bool family_singular_at(const FamilyPoint& p) {
    return p.x1() >= kHalfPi && p.x2() >= kHalfPi;
}

Matrix family_h_closure(const FamilyPoint& p) {
    if (!family_singular_at(p)) return family_h(p);
    const double x1 = p.x1(), x2 = p.x2();
    return assemble_family(std::polar(1.0, x1), std::polar(1.0, x2), f_factor(x1, x2), kI, f_factor(-x1, -x2), kI);
}

const char* to_string(Provenance p) {
    return p == Provenance::Paper ? "paper" : "external";
}

Matrix fourier(std::size_t d) {
    Matrix m(d);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = 0; k < d; ++k) {
            const std::size_t e = (j * k) % d;
            if ((6 * e) % d == 0) {
                m(j, k) = sixth_root(static_cast<long>(6 * e / d));
            } else {
                m(j, k) = std::polar(1.0, 2.0 * kPi * static_cast<double>(e) / static_cast<double>(d));
            }
        }
    }
    return m;
}

Matrix m2_matrix(Complex w) {
    const Complex one{1.0, 0.0};
    return Matrix{
        {w, w, one, one, one, one},
        {w, -w, -one, one, -one, one},
        {one, one, w, w, one, one},
        {one, -one, -w, w, -one, one},
        {one, one, one, one, w, w},
        {-one, one, one, -one, w, -w},
    };
}

namespace {

Matrix m1_matrix() {
    const Complex one{1.0, 0.0};
    const Complex i = kI;
    return Matrix{
        {i, one, one, one, one, one},
        {one, i, one, one, -one, -one},
        {one, one, i, -one, one, -one},
        {one, one, -one, i, -one, one},
        {one, -one, one, -one, i, one},
        {one, -one, -one, one, one, i},
    };
}

Matrix d0_matrix() {
    const Complex one{1.0, 0.0};
    const Complex i = kI;
    return Matrix{
        {one, one, one, one, one, one},
        {one, -one, i, -i, -i, i},
        {one, i, -one, i, -i, -i},
        {one, -i, i, -one, i, -i},
        {one, -i, -i, i, -one, i},
        {one, i, -i, -i, i, -one},
    };
}

// Tao's spectral matrix; entries are cube roots of unity.
Matrix s6_matrix() {
    const Complex one{1.0, 0.0};
    const Complex w = sixth_root(2);
    const Complex w2 = sixth_root(4);
    return Matrix{
        {one, one, one, one, one, one},
        {one, one, w, w, w2, w2},
        {one, w, one, w2, w2, w},
        {one, w, w2, one, w, w2},
        {one, w2, w2, w, one, w},
        {one, w2, w, w2, w, one},
    };
}

std::vector<RegistryEntry> build_registry() {
    std::vector<RegistryEntry> r;
    r.push_back({"M1", m1_matrix(), Provenance::Paper, "canonical matrix with i on the diagonal"});
    r.push_back({"M2_w1", m2_matrix(sixth_root(2)), Provenance::Paper, "canonical matrix with omega = e^{2 pi i/3}"});
    r.push_back({"M2_w2", m2_matrix(sixth_root(4)), Provenance::Paper, "canonical matrix with omega = e^{4 pi i/3}"});
    r.push_back({"D0", d0_matrix(), Provenance::Paper, "matrix complex-equivalent to M1"});
    r.push_back({"F6", fourier(6), Provenance::External, "Fourier matrix e^{2 pi i jk/6}"});
    r.push_back({"S6", s6_matrix(), Provenance::External, "Tao spectral matrix over cube roots of unity"});
    return r;
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
    static const std::vector<RegistryEntry> entries = build_registry();
    return entries;
}

const RegistryEntry& named(std::string_view name) {
    for (const auto& e : registry()) {
        if (e.name == name) return e;
    }
    throw Error(ErrorKind::UnknownName, "unknown matrix name: " + std::string(name));
}

}  // namespace chm
