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

#include <immintrin.h>

#include "tgbs/kernels.hpp"

// Compiled with -mavx2 only; called after a runtime CPU check.
// Operation order matches the scalar kernel so results are bit-identical.

namespace tgbs::kernels::avx2 {

void rank2_downdate(double *row, const double *w0, const double *w1, double a, double b, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    std::size_t j = 0;
    for (; j + 8 <= n; j += 8) {
        __m256d r0 = _mm256_loadu_pd(row + j);
        __m256d r1 = _mm256_loadu_pd(row + j + 4);
        __m256d t0 = _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(w0 + j)),
                                   _mm256_mul_pd(vb, _mm256_loadu_pd(w1 + j)));
        __m256d t1 = _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(w0 + j + 4)),
                                   _mm256_mul_pd(vb, _mm256_loadu_pd(w1 + j + 4)));
        _mm256_storeu_pd(row + j, _mm256_sub_pd(r0, t0));
        _mm256_storeu_pd(row + j + 4, _mm256_sub_pd(r1, t1));
    }
    for (; j + 4 <= n; j += 4) {
        __m256d r = _mm256_loadu_pd(row + j);
        __m256d t = _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(w0 + j)),
                                  _mm256_mul_pd(vb, _mm256_loadu_pd(w1 + j)));
        _mm256_storeu_pd(row + j, _mm256_sub_pd(r, t));
    }
    for (; j < n; ++j) {
        row[j] = row[j] - (a * w0[j] + b * w1[j]);
    }
}

void combine2(double *out, const double *x, const double *y, double a, double b, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    const __m256d vb = _mm256_set1_pd(b);
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
        __m256d t = _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(x + j)),
                                  _mm256_mul_pd(vb, _mm256_loadu_pd(y + j)));
        _mm256_storeu_pd(out + j, t);
    }
    for (; j < n; ++j) {
        out[j] = a * x[j] + b * y[j];
    }
}

}  // namespace tgbs::kernels::avx2
