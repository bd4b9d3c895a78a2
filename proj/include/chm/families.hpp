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

#include <string>
#include <string_view>
#include <vector>

#include "chm/core.hpp"

namespace chm {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2.0;

/// Parameters of the two-parameter H2-reducible family, both in (-pi/2, pi/2].
class FamilyPoint {
public:
    static constexpr double kOpenEndMargin = 1e-12;

    FamilyPoint(double x1, double x2);

    double x1() const noexcept { return x1_; }
    double x2() const noexcept { return x2_; }

private:
    double x1_;
    double x2_;
};

/// f(x1, x2) = e^{i(x1+x2)/2} (cos((x1-x2)/2) - i sin((x1+x2)/2))
///             * (1/2 + i sqrt(1/(1 + sin x1 sin x2) - 1/4))
///
/// The denominator is evaluated as cos^2((x1-x2)/2) + sin^2((x1+x2)/2), which
/// equals 1 + sin x1 sin x2 without cancellation near sin x1 sin x2 = -1.
/// Accepts the closed square [-pi/2, pi/2]^2; throws Error(Domain) outside it
/// or where the denominator drops to 1e-12.
Complex f_factor(double x1, double x2);

/// Same quantity from z1 = e^{i x1}, z2 = e^{i x2}:
///   (1 - (1-z1)(1-z2)/2) (1/2 + i sqrt(1/(1 - (z1-z1*)(z2-z2*)/4) - 1/4))
Complex f_factor_alt(double x1, double x2);

/// The 6x6 family with f1 = f(x1,x2), f2 = f(x1,-x2), f3 = f(-x1,-x2),
/// f4 = f(-x1,x2). Throws Error(Domain) at x1 = x2 = pi/2, where f2 and f4
/// are 0 * infinity forms.
Matrix family_h(const FamilyPoint& p);

/// family_h, except at the singular corner x1 = x2 = pi/2 where it returns
/// the limit along the diagonal x1 = x2 (f2 = f4 = i there). The limit is a
/// CHM; other approach directions give different limits.
Matrix family_h_closure(const FamilyPoint& p);

bool family_singular_at(const FamilyPoint& p);

/// Entry-wise assembly from z1, z2 and the four f values.
Matrix assemble_family(Complex z1, Complex z2, Complex f1, Complex f2, Complex f3, Complex f4);

enum class Provenance { Paper, External };

const char* to_string(Provenance p);

struct RegistryEntry {
    std::string name;
    Matrix matrix;
    Provenance provenance;
    std::string description;
};

/// M1, M2_w1, M2_w2, D0 (published examples) and F6, S6 (controls).
const std::vector<RegistryEntry>& registry();

/// Throws Error(UnknownName).
const RegistryEntry& named(std::string_view name);

/// F_d with entries e^{2 pi i jk/d}; exact where the angle is a multiple of pi/6.
Matrix fourier(std::size_t d);

/// Second canonical matrix for a given primitive cube root omega.
Matrix m2_matrix(Complex omega);

}  // namespace chm
