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

#include "tgbs/gaussian_state.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>

#include "tgbs/branch_ops.hpp"
#include "tgbs/rng.hpp"

namespace tgbs {

GaussianState::GaussianState(Matrix cov, Vector mean) : cov_(std::move(cov)), mean_(std::move(mean)) {
    if (mean_.size() == 0 || mean_.size() % 2 != 0) {
        throw std::invalid_argument("mean vector must have positive even length");
    }
    if (cov_.rows() != mean_.size() || cov_.cols() != mean_.size()) {
        throw std::invalid_argument("covariance shape does not match mean length");
    }
    if (!cov_.allFinite() || !mean_.allFinite()) {
        throw std::invalid_argument("covariance or mean has non-finite entries");
    }
    const double scale = std::max(1.0, cov_.cwiseAbs().maxCoeff());
    if ((cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTol * scale) {
        throw std::invalid_argument("covariance matrix is not symmetric");
    }
    cov_ = 0.5 * (cov_ + cov_.transpose()).eval();
}

double GaussianState::mean_photon_number() const {
    return (cov_.trace() + mean_.squaredNorm()) / 4.0 - static_cast<double>(n_modes()) / 2.0;
}

double GaussianState::min_symplectic_eigenvalue() const {
    const auto dim = cov_.rows();
    Matrix omega = Matrix::Zero(dim, dim);
    for (Eigen::Index j = 0; j < dim; j += 2) {
        omega(j, j + 1) = 1.0;
        omega(j + 1, j) = -1.0;
    }
    Eigen::EigenSolver<Matrix> solver(omega * cov_, false);
    return solver.eigenvalues().cwiseAbs().minCoeff();
}

bool GaussianState::is_physical(double tol) const {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(cov_, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() <= 0.0) {
        return false;
    }
    return min_symplectic_eigenvalue() >= 1.0 - tol;
}

GaussianState GaussianState::marginal(std::span<const std::size_t> modes) const {
    if (modes.empty()) {
        throw std::invalid_argument("marginal needs at least one mode");
    }
    std::vector<Eigen::Index> idx;
    idx.reserve(2 * modes.size());
    for (std::size_t m : modes) {
        if (m >= n_modes()) {
            throw std::out_of_range("mode index " + std::to_string(m) + " out of range");
        }
        idx.push_back(static_cast<Eigen::Index>(2 * m));
        idx.push_back(static_cast<Eigen::Index>(2 * m + 1));
    }
    return GaussianState(cov_(idx, idx), mean_(idx));
}

GaussianState vacuum_state(std::size_t n_modes) {
    if (n_modes == 0) {
        throw std::invalid_argument("vacuum_state needs at least one mode");
    }
    const auto dim = static_cast<Eigen::Index>(2 * n_modes);
    return GaussianState(Matrix::Identity(dim, dim), Vector::Zero(dim));
}

GaussianState squeezed_vacuum(std::span<const double> squeezing) {
    if (squeezing.empty()) {
        throw std::invalid_argument("squeezed_vacuum needs at least one mode");
    }
    const auto dim = static_cast<Eigen::Index>(2 * squeezing.size());
    Matrix cov = Matrix::Zero(dim, dim);
    for (std::size_t i = 0; i < squeezing.size(); ++i) {
        const double r = squeezing[i];
        if (!std::isfinite(r)) {
            throw std::invalid_argument("squeezing parameter is not finite");
        }
        cov(2 * i, 2 * i) = std::exp(-2.0 * r);
        cov(2 * i + 1, 2 * i + 1) = std::exp(2.0 * r);
    }
    return GaussianState(std::move(cov), Vector::Zero(dim));
}

double squeezing_from_db(double db) { return db * std::numbers::ln10 / 20.0; }

double db_from_squeezing(double r) { return r * 20.0 / std::numbers::ln10; }

double transmission_from_db(double loss_db) {
    if (!(loss_db >= 0.0) || !std::isfinite(loss_db)) {
        throw std::invalid_argument("loss in dB must be finite and non-negative");
    }
    return std::pow(10.0, -loss_db / 10.0);
}

ComplexMatrix haar_unitary(std::size_t n, Rng &rng) {
    if (n == 0) {
        throw std::invalid_argument("haar_unitary needs n >= 1");
    }
    const auto dim = static_cast<Eigen::Index>(n);
    std::normal_distribution<double> normal(0.0, std::numbers::sqrt2 / 2.0);
    ComplexMatrix z(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            const double re = normal(rng.engine());
            const double im = normal(rng.engine());
            z(i, j) = {re, im};
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix &r = qr.matrixQR();
    for (Eigen::Index j = 0; j < dim; ++j) {
        const std::complex<double> d = r(j, j);
        const double mag = std::abs(d);
        q.col(j) *= mag > 0.0 ? d / mag : std::complex<double>(1.0, 0.0);
    }
    return q;
}

ComplexMatrix haar_unitary(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    return haar_unitary(n, rng);
}

double unitarity_error(const ComplexMatrix &u) {
    const auto n = u.rows();
    return (u.adjoint() * u - ComplexMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

Matrix interferometer_symplectic(const ComplexMatrix &u) {
    const auto n = u.rows();
    Matrix s(2 * n, 2 * n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k) {
            const double re = u(j, k).real();
            const double im = u(j, k).imag();
            s(2 * j, 2 * k) = re;
            s(2 * j, 2 * k + 1) = -im;
            s(2 * j + 1, 2 * k) = im;
            s(2 * j + 1, 2 * k + 1) = re;
        }
    }
    return s;
}

GaussianState apply_interferometer(const GaussianState &state, const ComplexMatrix &u) {
    if (u.rows() != u.cols() || static_cast<std::size_t>(u.rows()) != state.n_modes()) {
        throw std::invalid_argument("interferometer dimension does not match the number of modes");
    }
    if (unitarity_error(u) > kUnitaryTol) {
        throw std::invalid_argument("interferometer matrix is not unitary");
    }
    const Matrix s = interferometer_symplectic(u);
    return GaussianState(s * state.cov() * s.transpose(), s * state.mean());
}

GaussianState apply_loss(const GaussianState &state, std::span<const double> transmission) {
    const std::size_t n = state.n_modes();
    if (transmission.size() != n) {
        throw std::invalid_argument("transmission vector length does not match the number of modes");
    }
    Vector amp(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = transmission[i];
        if (!(t >= 0.0 && t <= 1.0)) {
            throw std::invalid_argument("transmission must lie in [0, 1]");
        }
        amp(2 * i) = amp(2 * i + 1) = std::sqrt(t);
    }
    Matrix cov = amp.asDiagonal() * state.cov() * amp.asDiagonal();
    for (std::size_t i = 0; i < n; ++i) {
        cov(2 * i, 2 * i) += 1.0 - transmission[i];
        cov(2 * i + 1, 2 * i + 1) += 1.0 - transmission[i];
    }
    return GaussianState(std::move(cov), amp.cwiseProduct(state.mean()));
}

GaussianState apply_uniform_loss(const GaussianState &state, double transmission) {
    std::vector<double> t(state.n_modes(), transmission);
    return apply_loss(state, t);
}

ModeBlocks partition_mode(const GaussianState &state, std::size_t mode) {
    const std::size_t n = state.n_modes();
    if (mode >= n) {
        throw std::out_of_range("mode index " + std::to_string(mode) + " out of range");
    }
    std::vector<Eigen::Index> rest;
    rest.reserve(2 * n - 2);
    for (std::size_t i = 0; i < 2 * n; ++i) {
        if (i / 2 != mode) {
            rest.push_back(static_cast<Eigen::Index>(i));
        }
    }
    const std::vector<Eigen::Index> b{static_cast<Eigen::Index>(2 * mode), static_cast<Eigen::Index>(2 * mode + 1)};
    ModeBlocks out;
    out.mode = mode;
    out.a = state.cov()(rest, rest);
    out.ab = state.cov()(rest, b);
    out.b = state.cov()(b, b);
    out.mean_a = state.mean()(rest);
    out.mean_b = state.mean()(b);
    return out;
}

GaussianState reassemble(const ModeBlocks &blocks) {
    const auto dim_a = blocks.a.rows();
    const auto dim = dim_a + 2;
    if (static_cast<Eigen::Index>(2 * blocks.mode) > dim_a) {
        throw std::out_of_range("block mode index out of range");
    }
    std::vector<Eigen::Index> rest;
    for (Eigen::Index i = 0; i < dim; ++i) {
        if (static_cast<std::size_t>(i / 2) != blocks.mode) {
            rest.push_back(i);
        }
    }
    const std::vector<Eigen::Index> b{static_cast<Eigen::Index>(2 * blocks.mode),
                                      static_cast<Eigen::Index>(2 * blocks.mode + 1)};
    Matrix cov(dim, dim);
    Vector mean(dim);
    cov(rest, rest) = blocks.a;
    cov(rest, b) = blocks.ab;
    cov(b, rest) = blocks.ab.transpose();
    cov(b, b) = blocks.b;
    mean(rest) = blocks.mean_a;
    mean(b) = blocks.mean_b;
    return GaussianState(std::move(cov), std::move(mean));
}

double vacuum_overlap_prob(const Eigen::Matrix2d &vb, const Eigen::Vector2d &rb) {
    if (std::abs(vb(0, 1) - vb(1, 0)) > kSymmetryTol * std::max(1.0, vb.cwiseAbs().maxCoeff())) {
        throw std::invalid_argument("V_B is not symmetric");
    }
    return project_vacuum(vb(0, 0), vb(0, 1), vb(1, 1), rb(0), rb(1)).q;
}

ConditionedBlock conditional_no_click_update(const ModeBlocks &blocks) {
    const Eigen::Matrix2d shifted = blocks.b + Eigen::Matrix2d::Identity();
    const double det = shifted.determinant();
    if (!(det > 0.0) || !(shifted(0, 0) > 0.0)) {
        throw NumericalDomainError("V_B + I is not positive definite");
    }
    const Eigen::Matrix2d inv = shifted.inverse();
    ConditionedBlock out;
    out.cov = blocks.a - blocks.ab * inv * blocks.ab.transpose();
    out.cov = 0.5 * (out.cov + out.cov.transpose()).eval();
    out.mean = blocks.mean_a - blocks.ab * (inv * blocks.mean_b);
    return out;
}

}  // namespace tgbs
