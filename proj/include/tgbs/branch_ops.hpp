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

#pragma once

#include <cstddef>
#include <span>

namespace tgbs {

/// (V_B + I)^{-1} by adjugate together with the vacuum overlap of the block.
struct VacuumProjection {
    double q = 1.0;
    double det = 4.0;
    double g00 = 0.5;
    double g01 = 0.0;
    double g11 = 0.5;
};

/// Inputs are the measured mode's 2x2 covariance entries and its mean.
/// Throws NumericalDomainError when V_B + I is not positive definite or q
/// falls outside [-kProbabilityTol, 1 + kProbabilityTol]; q is clamped to [0, 1].
VacuumProjection project_vacuum(double v00, double v01, double v11, double r0, double r1);

/// Raw row-major views used by the mixture pool. `dim` is 2 * modes and
/// `pos` is the zero-based position of the measured mode inside the buffer.
VacuumProjection project_vacuum(const double *cov, const double *mean, std::size_t dim, std::size_t pos);

/// Writes the (dim-2)-dimensional marginal with mode `pos` removed.
void drop_mode(const double *cov, const double *mean, std::size_t dim, std::size_t pos, double *out_cov,
               double *out_mean);

/// Writes V_A' and r_A' (vacuum-conditioned on mode `pos`) using the active
/// SIMD kernels. `scratch` must hold at least 4 * (dim - 2) doubles. The
/// result is exactly symmetric: the upper triangle is computed and mirrored.
void condition_on_vacuum(const double *cov, const double *mean, std::size_t dim, std::size_t pos,
                         const VacuumProjection &proj, double *out_cov, double *out_mean,
                         std::span<double> scratch);

}  // namespace tgbs
