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
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tgbs/errors.hpp"

namespace tgbs {

class Rng;

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Gaussian state of `n_modes` bosonic modes in the hbar = 2 convention.
///
/// Quadratures are interleaved as (x_1, p_1, ..., x_n, p_n), so mode j
/// (zero-based) owns rows/columns {2j, 2j+1}. Vacuum has identity covariance.
/// The constructor checks shapes and symmetry (within kSymmetryTol) and then
/// stores the exactly symmetrized matrix; physicality is checked separately
/// because conditioned branches of a mixture need not be physical states.
class GaussianState {
  public:
    GaussianState(Matrix cov, Vector mean);

    std::size_t n_modes() const noexcept { return static_cast<std::size_t>(mean_.size() / 2); }
    const Matrix &cov() const noexcept { return cov_; }
    const Vector &mean() const noexcept { return mean_; }

    /// (tr V + |r|^2) / 4 - n / 2.
    double mean_photon_number() const;

    /// Smallest symplectic eigenvalue; >= 1 for physical states.
    double min_symplectic_eigenvalue() const;

    bool is_physical(double tol = kPhysicalityTol) const;

    /// State of the listed modes (in the listed order) after tracing out the rest.
    GaussianState marginal(std::span<const std::size_t> modes) const;

  private:
    Matrix cov_;
    Vector mean_;
};

/// Covariance and mean split into the measured mode (B) and the rest (A).
/// A keeps the remaining modes in their original relative order.
struct ModeBlocks {
    std::size_t mode = 0;
    Matrix a;
    Matrix ab;
    Eigen::Matrix2d b;
    Vector mean_a;
    Eigen::Vector2d mean_b;
};

/// Unnormalized A-subsystem state after projecting B onto vacuum.
struct ConditionedBlock {
    Matrix cov;
    Vector mean;
};

GaussianState vacuum_state(std::size_t n_modes);

/// Product of single-mode squeezed vacua; mode i has cov diag(e^{-2r_i}, e^{2r_i}).
GaussianState squeezed_vacuum(std::span<const double> squeezing);

/// Squeezing parameter for a quadrature-variance reduction of `db` decibels:
/// db = 10 log10(e^{2r}), so 8 dB -> r = 0.9210.
double squeezing_from_db(double db);
double db_from_squeezing(double r);

/// Power transmission for a loss of `loss_db` decibels: T = 10^{-loss_db/10}.
double transmission_from_db(double loss_db);

/// Haar-random n x n unitary: QR of a complex Ginibre matrix with the phases of
/// diag(R) divided out.
ComplexMatrix haar_unitary(std::size_t n, Rng &rng);
ComplexMatrix haar_unitary(std::size_t n, std::uint64_t seed);

double unitarity_error(const ComplexMatrix &u);

/// Real 2n x 2n orthogonal symplectic matrix of the passive transformation
/// a -> U a in the interleaved ordering.
Matrix interferometer_symplectic(const ComplexMatrix &u);

GaussianState apply_interferometer(const GaussianState &state, const ComplexMatrix &u);

/// Pure-loss channel with per-mode power transmission in [0, 1].
GaussianState apply_loss(const GaussianState &state, std::span<const double> transmission);
GaussianState apply_uniform_loss(const GaussianState &state, double transmission);

ModeBlocks partition_mode(const GaussianState &state, std::size_t mode);
GaussianState reassemble(const ModeBlocks &blocks);

/// Vacuum (no-click) probability of one mode:
/// 2 exp(-r^T (V+I)^{-1} r / 2) / sqrt(det(V+I)); a coherent state with
/// |alpha|^2 = 1 (mean (2, 0)) gives e^{-1}. Throws NumericalDomainError if
/// V+I is not positive definite or the result leaves [0, 1] by more than kProbabilityTol.
double vacuum_overlap_prob(const Eigen::Matrix2d &vb, const Eigen::Vector2d &rb);

/// V_A - V_AB (V_B+I)^{-1} V_AB^T and r_A - V_AB (V_B+I)^{-1} r_B.
ConditionedBlock conditional_no_click_update(const ModeBlocks &blocks);

}  // namespace tgbs
