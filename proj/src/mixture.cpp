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

#include "tgbs/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "tgbs/branch_ops.hpp"
#include "tgbs/rng.hpp"

namespace tgbs {
namespace {

std::size_t record_stride(std::size_t dim) {
    const std::size_t raw = dim * dim + dim + 2;
    return (raw + 3) / 4 * 4;
}

}  // namespace

struct MixtureBuilder {
    static StateMixture empty_like(const StateMixture &parent, std::size_t measured_pos, std::size_t count) {
        StateMixture out;
        out.labels_ = parent.labels_;
        out.labels_.erase(out.labels_.begin() + static_cast<std::ptrdiff_t>(measured_pos));
        out.dim_ = parent.dim_ - 2;
        out.stride_ = record_stride(out.dim_);
        out.count_ = count;
        out.clicks_ = parent.clicks_;
        out.pool_.assign(count * out.stride_, 0.0);
        out.history_ = parent.history_;
        return out;
    }

    static double *record(StateMixture &m, std::size_t k) { return m.pool_.data() + k * m.stride_; }
    static void set_coeff(StateMixture &m, std::size_t k, DoubleDouble c) {
        double *slot = m.pool_.data() + k * m.stride_ + m.dim_ * m.dim_ + m.dim_;
        slot[0] = c.hi;
        slot[1] = c.lo;
    }
    static void finish(StateMixture &m, std::size_t mode, std::uint8_t outcome) {
        m.clicks_ += outcome;
        m.history_.push_back({mode, outcome});
    }
};

StateMixture StateMixture::from_state(const GaussianState &state) {
    StateMixture m;
    const std::size_t n = state.n_modes();
    m.labels_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.labels_[i] = i;
    }
    m.dim_ = 2 * n;
    m.stride_ = record_stride(m.dim_);
    m.count_ = 1;
    m.pool_.assign(m.stride_, 0.0);
    for (std::size_t i = 0; i < m.dim_; ++i) {
        for (std::size_t j = 0; j < m.dim_; ++j) {
            m.pool_[i * m.dim_ + j] = state.cov()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
        m.pool_[m.dim_ * m.dim_ + i] = state.mean()(static_cast<Eigen::Index>(i));
    }
    m.pool_[m.dim_ * m.dim_ + m.dim_] = 1.0;
    m.pool_[m.dim_ * m.dim_ + m.dim_ + 1] = 0.0;
    return m;
}

std::size_t StateMixture::position_of(std::size_t mode) const {
    auto it = std::find(labels_.begin(), labels_.end(), mode);
    if (it == labels_.end()) {
        throw std::out_of_range("mode " + std::to_string(mode) + " is not among the remaining modes");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

WeightedBranch StateMixture::branch(std::size_t k) const {
    if (k >= count_) {
        throw std::out_of_range("branch index out of range");
    }
    if (dim_ == 0) {
        throw std::logic_error("all modes have been measured; branches carry no state");
    }
    const auto d = static_cast<Eigen::Index>(dim_);
    Matrix cov = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
        cov_data(k), d, d);
    Vector mean = Eigen::Map<const Vector>(mean_data(k), d);
    return {coeff(k), GaussianState(std::move(cov), std::move(mean))};
}

double StateMixture::coefficient_sum(Precision precision) const {
    Accumulator acc(precision);
    for (std::size_t k = 0; k < count_; ++k) {
        const DoubleDouble c = coeff_dd(k);
        acc.add(c.hi);
        acc.add(c.lo);
    }
    return acc.value();
}

namespace {

const Executor &executor_of(const RunOptions &options) {
    return options.executor != nullptr ? *options.executor : Executor::serial();
}

// Vacuum projections of every branch plus p = sum a_k q_k, reduced in chunk order.
// p = sum_k a_k q_k. Rounding in the signed sum scales with sum_k |a_k q_k|, so
// the tolerance band is widened by that factor.
struct Projected {
    double p;
    double tol;
    DoubleDouble p_dd;
};

Projected project_all(const StateMixture &m, std::size_t pos, const RunOptions &options,
                      std::vector<VacuumProjection> &proj) {
    const Executor &ex = executor_of(options);
    const std::size_t count = m.branch_count();
    proj.resize(count);
    const std::size_t chunks = ex.chunk_count(count);
    std::vector<Accumulator> partial(chunks, Accumulator(options.precision));
    std::vector<double> magnitude(chunks, 0.0);
    ex.for_each_chunk(count, [&](std::size_t c, std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            proj[k] = project_vacuum(m.cov_data(k), m.mean_data(k), m.dim(), pos);
            partial[c].add_product(m.coeff_dd(k), proj[k].q);
            magnitude[c] += std::abs(m.coeff(k) * proj[k].q);
        }
    });
    Accumulator total(options.precision);
    double scale = 0.0;
    for (std::size_t c = 0; c < chunks; ++c) {
        total.merge(partial[c]);
        scale += magnitude[c];
    }
    const double p = total.value();
    const double tol = kProbabilityTol * std::max(1.0, scale);
    if (!(p >= -tol && p <= 1.0 + tol)) {
        throw PrecisionError("no-click probability " + std::to_string(p) +
                             " outside [0, 1]; accumulated cancellation exceeds tolerance");
    }
    return {std::clamp(p, 0.0, 1.0), tol, total.dd_value()};
}

}  // namespace

double no_click_probability(const StateMixture &mixture, std::size_t mode, const RunOptions &options) {
    std::vector<VacuumProjection> proj;
    return project_all(mixture, mixture.position_of(mode), options, proj).p;
}

MeasureResult measure_mode(const StateMixture &mixture, std::size_t mode, std::optional<std::uint8_t> forced,
                           Rng *rng, const RunOptions &options) {
    const std::size_t pos = mixture.position_of(mode);
    if (!forced.has_value() && rng == nullptr) {
        throw std::invalid_argument("random measurement requires an rng");
    }
    std::vector<VacuumProjection> proj;
    const auto [p, tol, p_dd] = project_all(mixture, pos, options, proj);

    std::uint8_t outcome = 0;
    if (forced.has_value()) {
        if (*forced > 1) {
            throw std::invalid_argument("forced outcome must be 0 or 1");
        }
        outcome = *forced;
        const double prob = outcome ? 1.0 - p : p;
        if (prob < tol) {
            throw ImpossibleOutcomeError("forced " + std::string(outcome ? "click" : "no-click") + " on mode " +
                                         std::to_string(mode) + " has probability " + std::to_string(prob));
        }
    } else if (p >= 1.0 - tol) {
        outcome = 0;
    } else if (p <= tol) {
        outcome = 1;
    } else {
        outcome = rng->uniform() < p ? 0 : 1;
    }
    const double prob = outcome ? 1.0 - p : p;

    const std::size_t count = mixture.branch_count();
    const std::size_t in_dim = mixture.dim();
    StateMixture out = MixtureBuilder::empty_like(mixture, pos, outcome ? 2 * count : count);
    const DoubleDouble rest = DoubleDouble{1.0, 0.0} - p_dd;
    const Executor &ex = executor_of(options);
    ex.for_each_chunk(count, [&](std::size_t, std::size_t begin, std::size_t end) {
        std::vector<double> scratch(4 * (in_dim > 2 ? in_dim - 2 : 1));
        const std::size_t out_dim2 = out.dim() * out.dim();
        for (std::size_t k = begin; k < end; ++k) {
            const double *cov = mixture.cov_data(k);
            const double *mean = mixture.mean_data(k);
            if (outcome == 0) {
                double *dst = MixtureBuilder::record(out, k);
                condition_on_vacuum(cov, mean, in_dim, pos, proj[k], dst, dst + out_dim2, scratch);
            } else {
                double *keep = MixtureBuilder::record(out, 2 * k);
                drop_mode(cov, mean, in_dim, pos, keep, keep + out_dim2);
                double *cond = MixtureBuilder::record(out, 2 * k + 1);
                condition_on_vacuum(cov, mean, in_dim, pos, proj[k], cond, cond + out_dim2, scratch);
            }
            // Double-double coefficients keep sum a_k = 1 when the a_k cancel heavily.
            const DoubleDouble a = mixture.coeff_dd(k);
            const DoubleDouble aq = a * proj[k].q;
            if (outcome == 0) {
                MixtureBuilder::set_coeff(out, k, aq / p_dd);
            } else {
                MixtureBuilder::set_coeff(out, 2 * k, a / rest);
                MixtureBuilder::set_coeff(out, 2 * k + 1, -(aq / rest));
            }
        }
    });
    MixtureBuilder::finish(out, mode, outcome);

    const double trace = out.coefficient_sum(options.precision);
    if (!(std::abs(trace - 1.0) <= kNormTol)) {
        double spread = 0.0;
        for (std::size_t k = 0; k < out.branch_count(); ++k) {
            spread += std::abs(out.coeff(k));
        }
        char buf[160];
        std::snprintf(buf, sizeof buf, "mixture coefficients sum to 1%+.3e (sum |a_k| = %.3e, p = %.3e) after measuring mode %zu",
                      trace - 1.0, spread, p, mode);
        throw PrecisionError(buf);
    }
    return {outcome, prob, std::move(out)};
}

}  // namespace tgbs
