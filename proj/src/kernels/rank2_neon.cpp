// Copyright 2026 The tgbs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <arm_neon.h>

#include "tgbs/kernels.hpp"

namespace tgbs::kernels::neon {

void rank2_downdate(double *row, const double *w0, const double *w1, double a, double b, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    const float64x2_t vb = vdupq_n_f64(b);
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        float64x2_t t = vaddq_f64(vmulq_f64(va, vld1q_f64(w0 + j)), vmulq_f64(vb, vld1q_f64(w1 + j)));
        vst1q_f64(row + j, vsubq_f64(vld1q_f64(row + j), t));
    }
    for (; j < n; ++j) {
        row[j] = row[j] - (a * w0[j] + b * w1[j]);
    }
}

void combine2(double *out, const double *x, const double *y, double a, double b, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(a);
    const float64x2_t vb = vdupq_n_f64(b);
    std::size_t j = 0;
    for (; j + 2 <= n; j += 2) {
        vst1q_f64(out + j, vaddq_f64(vmulq_f64(va, vld1q_f64(x + j)), vmulq_f64(vb, vld1q_f64(y + j))));
    }
    for (; j < n; ++j) {
        out[j] = a * x[j] + b * y[j];
    }
}

}  // namespace tgbs::kernels::neon
