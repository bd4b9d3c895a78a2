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

// Data-parallel inner loops. Each kernel has a scalar reference in
// chm::kernels::generic and, where the build and the CPU allow it, a SIMD
// variant. Variants compute every lane with the same operation order as the
// scalar code and without FMA contraction, so results are bit-identical.

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "chm/core.hpp"

namespace chm::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view name(Isa isa);

/// Split-complex column-major storage with the row count padded to a
/// multiple of four. Padding entries are zero.
struct SplitMatrix {
    std::size_t d = 0;
    std::size_t stride = 0;
    std::vector<double> re;
    std::vector<double> im;

    static SplitMatrix from(const Matrix& m);
    double re_at(std::size_t row, std::size_t col) const { return re[col * stride + row]; }
    double im_at(std::size_t row, std::size_t col) const { return im[col * stride + row]; }
};

/// n independent 2x2 arrays [[a, b], [c, d]] in split form.
struct QuadBatch {
    std::vector<double> a_re, a_im, b_re, b_im, c_re, c_im, d_re, d_im;

    std::size_t size() const noexcept { return a_re.size(); }
    void clear();
    void reserve(std::size_t n);
    void push(Complex a, Complex b, Complex c, Complex d);
};

struct KernelTable {
    Isa isa;
    // sum_out[i] = |a d + b c|, orth_out[i] = |a conj(c) + b conj(d)|
    void (*quad_residuals)(const QuadBatch& batch, std::span<double> sum_out,
                           std::span<double> orth_out);
    double (*gram_residual)(const SplitMatrix& m);
    // max_i |a_i - b_i| over split-complex arrays of equal length
    double (*max_abs_diff)(std::span<const double> a_re, std::span<const double> a_im,
                           std::span<const double> b_re, std::span<const double> b_im);
};

bool available(Isa isa);

/// Table for a specific ISA; throws Error(InvalidArgument) if unavailable.
const KernelTable& table(Isa isa);

/// Best available table. CHM_SIMD=scalar in the environment pins the scalar
/// reference.
const KernelTable& active();

namespace generic {
void quad_residuals(const QuadBatch& batch, std::span<double> sum_out, std::span<double> orth_out);
double gram_residual(const SplitMatrix& m);
double max_abs_diff(std::span<const double> a_re, std::span<const double> a_im,
                    std::span<const double> b_re, std::span<const double> b_im);
}  // namespace generic

#if defined(CHM_HAVE_AVX2)
namespace avx2 {
void quad_residuals(const QuadBatch& batch, std::span<double> sum_out, std::span<double> orth_out);
double gram_residual(const SplitMatrix& m);
double max_abs_diff(std::span<const double> a_re, std::span<const double> a_im,
                    std::span<const double> b_re, std::span<const double> b_im);
}  // namespace avx2
#endif

}  // namespace chm::kernels
