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

#include <algorithm>
#include <cmath>

#include "chm/kernels.hpp"

namespace chm::kernels::generic {

void quad_residuals(const QuadBatch& q, std::span<double> sum_out, std::span<double> orth_out) {
    const std::size_t n = q.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double ar = q.a_re[i], ai = q.a_im[i];
        const double br = q.b_re[i], bi = q.b_im[i];
        const double cr = q.c_re[i], ci = q.c_im[i];
        const double dr = q.d_re[i], di = q.d_im[i];

        // a d + b c
        const double sr = (ar * dr - ai * di) + (br * cr - bi * ci);
        const double si = (ar * di + ai * dr) + (br * ci + bi * cr);
        sum_out[i] = std::sqrt(sr * sr + si * si);

        // a conj(c) + b conj(d)
        const double orr = (ar * cr + ai * ci) + (br * dr + bi * di);
        const double oi = (ai * cr - ar * ci) + (bi * dr - br * di);
        orth_out[i] = std::sqrt(orr * orr + oi * oi);
    }
}

double gram_residual(const SplitMatrix& m) {
    const std::size_t d = m.d;
    double worst = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t l = 0; l < d; ++l) {
            double gr = 0.0, gi = 0.0;
            for (std::size_t k = 0; k < d; ++k) {
                const double a = m.re[k * m.stride + j], b = m.im[k * m.stride + j];
                const double c = m.re[k * m.stride + l], e = m.im[k * m.stride + l];
                gr = gr + (a * c + b * e);
                gi = gi + (b * c - a * e);
            }
            if (j == l) gr = gr - static_cast<double>(d);
            worst = std::max(worst, std::sqrt(gr * gr + gi * gi));
        }
    }
    return worst;
}

double max_abs_diff(std::span<const double> a_re, std::span<const double> a_im,
                    std::span<const double> b_re, std::span<const double> b_im) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a_re.size(); ++i) {
        const double dr = a_re[i] - b_re[i];
        const double di = a_im[i] - b_im[i];
        worst = std::max(worst, std::sqrt(dr * dr + di * di));
    }
    return worst;
}

}  // namespace chm::kernels::generic
