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

#include <cstdlib>
#include <cstring>

#include "chm/kernels.hpp"

namespace chm::kernels {

std::string_view name(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
    }
    return "unknown";
}

SplitMatrix SplitMatrix::from(const Matrix& m) {
    SplitMatrix s;
    s.d = m.dim();
    s.stride = (s.d + 3) / 4 * 4;
    s.re.assign(s.stride * s.d, 0.0);
    s.im.assign(s.stride * s.d, 0.0);
    for (std::size_t col = 0; col < s.d; ++col) {
        for (std::size_t row = 0; row < s.d; ++row) {
            s.re[col * s.stride + row] = m(row, col).real();
            s.im[col * s.stride + row] = m(row, col).imag();
        }
    }
    return s;
}

void QuadBatch::clear() {
    for (auto* v : {&a_re, &a_im, &b_re, &b_im, &c_re, &c_im, &d_re, &d_im}) v->clear();
}

void QuadBatch::reserve(std::size_t n) {
    for (auto* v : {&a_re, &a_im, &b_re, &b_im, &c_re, &c_im, &d_re, &d_im}) v->reserve(n);
}

void QuadBatch::push(Complex a, Complex b, Complex c, Complex d) {
    a_re.push_back(a.real());
    a_im.push_back(a.imag());
    b_re.push_back(b.real());
    b_im.push_back(b.imag());
    c_re.push_back(c.real());
    c_im.push_back(c.imag());
    d_re.push_back(d.real());
    d_im.push_back(d.imag());
}

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &generic::quad_residuals, &generic::gram_residual,
                              &generic::max_abs_diff};

#if defined(CHM_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::quad_residuals, &avx2::gram_residual,
                            &avx2::max_abs_diff};
#endif

bool cpu_has_avx2() {
#if defined(CHM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelTable& select() {
    const char* forced = std::getenv("CHM_SIMD");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return kScalar;
#if defined(CHM_HAVE_AVX2)
    if (cpu_has_avx2()) return kAvx2;
#endif
    return kScalar;
}

}  // namespace

bool available(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
            return cpu_has_avx2();
    }
    return false;
}

const KernelTable& table(Isa isa) {
    if (!available(isa)) {
        throw Error(ErrorKind::InvalidArgument,
                    "kernel ISA not available on this build/CPU: " + std::string(name(isa)));
    }
#if defined(CHM_HAVE_AVX2)
    if (isa == Isa::Avx2) return kAvx2;
#endif
    return kScalar;
}

const KernelTable& active() {
    static const KernelTable& chosen = select();
    return chosen;
}

}  // namespace chm::kernels
