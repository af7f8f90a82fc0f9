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

#include "tgbs/kernels.hpp"

namespace tgbs::kernels::scalar {

void rank2_downdate(double *row, const double *w0, const double *w1, double a, double b, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        row[j] = row[j] - (a * w0[j] + b * w1[j]);
    }
}

void combine2(double *out, const double *x, const double *y, double a, double b, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        out[j] = a * x[j] + b * y[j];
    }
}

}  // namespace tgbs::kernels::scalar
