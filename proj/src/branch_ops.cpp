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

#include "tgbs/branch_ops.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include "tgbs/errors.hpp"
#include "tgbs/kernels.hpp"

namespace tgbs {

VacuumProjection project_vacuum(double v00, double v01, double v11, double r0, double r1) {
    const double b00 = v00 + 1.0;
    const double b11 = v11 + 1.0;
    const double det = b00 * b11 - v01 * v01;
    if (!(det > 0.0) || !(b00 > 0.0) || !std::isfinite(det)) {
        throw NumericalDomainError("V_B + I is not positive definite (det = " + std::to_string(det) + ")");
    }
    VacuumProjection out;
    out.det = det;
    out.g00 = b11 / det;
    out.g01 = -v01 / det;
    out.g11 = b00 / det;
    const double quad = r0 * (out.g00 * r0 + out.g01 * r1) + r1 * (out.g01 * r0 + out.g11 * r1);
    double q = 2.0 * std::exp(-0.5 * quad) / std::sqrt(det);
    if (!(q >= -kProbabilityTol && q <= 1.0 + kProbabilityTol)) {
        throw NumericalDomainError("vacuum overlap " + std::to_string(q) + " outside [0, 1]");
    }
    out.q = std::clamp(q, 0.0, 1.0);
    return out;
}

VacuumProjection project_vacuum(const double *cov, const double *mean, std::size_t dim, std::size_t pos) {
    const std::size_t i = 2 * pos;
    return project_vacuum(cov[i * dim + i], cov[i * dim + i + 1], cov[(i + 1) * dim + i + 1], mean[i],
                          mean[i + 1]);
}

namespace {

// Copies row `src_row` of a dim x dim matrix with columns {c, c+1} removed.
inline void copy_row_without(const double *src_row, std::size_t dim, std::size_t c, double *dst) {
    std::memcpy(dst, src_row, c * sizeof(double));
    std::memcpy(dst + c, src_row + c + 2, (dim - c - 2) * sizeof(double));
}

}  // namespace

void drop_mode(const double *cov, const double *mean, std::size_t dim, std::size_t pos, double *out_cov,
               double *out_mean) {
    const std::size_t c = 2 * pos;
    const std::size_t out_dim = dim - 2;
    std::size_t r = 0;
    for (std::size_t i = 0; i < dim; ++i) {
        if (i == c || i == c + 1) {
            continue;
        }
        copy_row_without(cov + i * dim, dim, c, out_cov + r * out_dim);
        out_mean[r] = mean[i];
        ++r;
    }
}

void condition_on_vacuum(const double *cov, const double *mean, std::size_t dim, std::size_t pos,
                         const VacuumProjection &proj, double *out_cov, double *out_mean,
                         std::span<double> scratch) {
    const std::size_t c = 2 * pos;
    const std::size_t n = dim - 2;
    if (n == 0) {
        return;
    }
    const auto &k = kernels::active();
    double *w0 = scratch.data();
    double *w1 = w0 + n;
    double *c0 = w1 + n;
    double *c1 = c0 + n;

    // Columns coupling A to B, and the marginal copied into place.
    drop_mode(cov, mean, dim, pos, out_cov, out_mean);
    const double *col0 = cov + c * dim;  // row c equals column c by symmetry
    const double *col1 = cov + (c + 1) * dim;
    copy_row_without(col0, dim, c, w0);
    copy_row_without(col1, dim, c, w1);

    // c = W G, so V_A' = V_A - c W^T and r_A' = r_A - c r_B.
    k.combine2(c0, w0, w1, proj.g00, proj.g01, n);
    k.combine2(c1, w0, w1, proj.g01, proj.g11, n);
    k.rank2_downdate(out_mean, c0, c1, mean[c], mean[c + 1], n);

    for (std::size_t i = 0; i < n; ++i) {
        double *row = out_cov + i * n;
        k.rank2_downdate(row + i, w0 + i, w1 + i, c0[i], c1[i], n - i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            out_cov[j * n + i] = out_cov[i * n + j];
        }
    }
}

}  // namespace tgbs
