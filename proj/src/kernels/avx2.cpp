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

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "chm/kernels.hpp"

namespace chm::kernels::avx2 {

namespace {

inline __m256d modulus(__m256d re, __m256d im) {
    return _mm256_sqrt_pd(_mm256_add_pd(_mm256_mul_pd(re, re), _mm256_mul_pd(im, im)));
}

inline double hmax(__m256d v) {
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, v);
    return std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
}

}  // namespace

void quad_residuals(const QuadBatch& q, std::span<double> sum_out, std::span<double> orth_out) {
    const std::size_t n = q.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d ar = _mm256_loadu_pd(&q.a_re[i]), ai = _mm256_loadu_pd(&q.a_im[i]);
        const __m256d br = _mm256_loadu_pd(&q.b_re[i]), bi = _mm256_loadu_pd(&q.b_im[i]);
        const __m256d cr = _mm256_loadu_pd(&q.c_re[i]), ci = _mm256_loadu_pd(&q.c_im[i]);
        const __m256d dr = _mm256_loadu_pd(&q.d_re[i]), di = _mm256_loadu_pd(&q.d_im[i]);

        const __m256d sr = _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(ar, dr), _mm256_mul_pd(ai, di)),
                                         _mm256_sub_pd(_mm256_mul_pd(br, cr), _mm256_mul_pd(bi, ci)));
        const __m256d si = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(ar, di), _mm256_mul_pd(ai, dr)),
                                         _mm256_add_pd(_mm256_mul_pd(br, ci), _mm256_mul_pd(bi, cr)));
        _mm256_storeu_pd(&sum_out[i], modulus(sr, si));

        const __m256d orr = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(ar, cr), _mm256_mul_pd(ai, ci)),
                                          _mm256_add_pd(_mm256_mul_pd(br, dr), _mm256_mul_pd(bi, di)));
        const __m256d oi = _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(ai, cr), _mm256_mul_pd(ar, ci)),
                                         _mm256_sub_pd(_mm256_mul_pd(bi, dr), _mm256_mul_pd(br, di)));
        _mm256_storeu_pd(&orth_out[i], modulus(orr, oi));
    }
    for (; i < n; ++i) {
        const double ar = q.a_re[i], ai = q.a_im[i];
        const double br = q.b_re[i], bi = q.b_im[i];
        const double cr = q.c_re[i], ci = q.c_im[i];
        const double dr = q.d_re[i], di = q.d_im[i];
        const double sr = (ar * dr - ai * di) + (br * cr - bi * ci);
        const double si = (ar * di + ai * dr) + (br * ci + bi * cr);
        sum_out[i] = std::sqrt(sr * sr + si * si);
        const double orr = (ar * cr + ai * ci) + (br * dr + bi * di);
        const double oi = (ai * cr - ar * ci) + (bi * dr - br * di);
        orth_out[i] = std::sqrt(orr * orr + oi * oi);
    }
}

// Lanes run over the column index l of (M M^*)_{jl}; the padded stride keeps
// every load in bounds and padding rows contribute exact zeros.
double gram_residual(const SplitMatrix& m) {
    const std::size_t d = m.d;
    const __m256d dim = _mm256_set1_pd(static_cast<double>(d));
    __m256d worst = _mm256_setzero_pd();
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t l0 = 0; l0 < m.stride; l0 += 4) {
            __m256d gr = _mm256_setzero_pd();
            __m256d gi = _mm256_setzero_pd();
            for (std::size_t k = 0; k < d; ++k) {
                const __m256d a = _mm256_set1_pd(m.re[k * m.stride + j]);
                const __m256d b = _mm256_set1_pd(m.im[k * m.stride + j]);
                const __m256d c = _mm256_loadu_pd(&m.re[k * m.stride + l0]);
                const __m256d e = _mm256_loadu_pd(&m.im[k * m.stride + l0]);
                gr = _mm256_add_pd(gr, _mm256_add_pd(_mm256_mul_pd(a, c), _mm256_mul_pd(b, e)));
                gi = _mm256_add_pd(gi, _mm256_sub_pd(_mm256_mul_pd(b, c), _mm256_mul_pd(a, e)));
            }
            if (j >= l0 && j < l0 + 4) {
                alignas(32) double mask[4] = {0.0, 0.0, 0.0, 0.0};
                mask[j - l0] = 1.0;
                gr = _mm256_sub_pd(gr, _mm256_mul_pd(dim, _mm256_load_pd(mask)));
            }
            worst = _mm256_max_pd(worst, modulus(gr, gi));
        }
    }
    return hmax(worst);
}

double max_abs_diff(std::span<const double> a_re, std::span<const double> a_im,
                    std::span<const double> b_re, std::span<const double> b_im) {
    const std::size_t n = a_re.size();
    __m256d worst = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d dr = _mm256_sub_pd(_mm256_loadu_pd(&a_re[i]), _mm256_loadu_pd(&b_re[i]));
        const __m256d di = _mm256_sub_pd(_mm256_loadu_pd(&a_im[i]), _mm256_loadu_pd(&b_im[i]));
        worst = _mm256_max_pd(worst, modulus(dr, di));
    }
    double tail = hmax(worst);
    for (; i < n; ++i) {
        const double dr = a_re[i] - b_re[i];
        const double di = a_im[i] - b_im[i];
        tail = std::max(tail, std::sqrt(dr * dr + di * di));
    }
    return tail;
}

}  // namespace chm::kernels::avx2
