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

#include "tgbs/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "tgbs/precision.hpp"
#include "tgbs/sampler.hpp"

namespace tgbs {

double DistributionTable::total() const { return accurate_sum(probabilities); }

double DistributionTable::mean_clicks() const {
    Accumulator acc;
    for (std::size_t idx = 0; idx < probabilities.size(); ++idx) {
        acc.add_product(probabilities[idx], static_cast<double>(std::popcount(idx)));
    }
    return acc.value();
}

DistributionTable DistributionTable::marginalize(std::size_t mode) const {
    if (mode >= n_modes || n_modes < 2) {
        throw std::out_of_range("cannot marginalize mode " + std::to_string(mode));
    }
    DistributionTable out;
    out.n_modes = n_modes - 1;
    out.probabilities.assign(std::size_t{1} << out.n_modes, 0.0);
    const std::size_t low_mask = (std::size_t{1} << mode) - 1;
    for (std::size_t idx = 0; idx < probabilities.size(); ++idx) {
        const std::size_t reduced = (idx & low_mask) | ((idx >> (mode + 1)) << mode);
        out.probabilities[reduced] += probabilities[idx];
    }
    return out;
}

DistributionTable enumerate_distribution(const GaussianState &state, const RunOptions &options,
                                         std::size_t limit) {
    const std::size_t n = state.n_modes();
    if (n > limit) {
        throw std::invalid_argument("enumeration of " + std::to_string(n) + " modes exceeds the limit of " +
                                    std::to_string(limit));
    }
    const auto order = descending_order(n);
    DistributionTable table;
    table.n_modes = n;
    table.probabilities.assign(std::size_t{1} << n, 0.0);
    const Executor &ex = options.executor != nullptr ? *options.executor : Executor::serial();
    RunOptions inner;
    inner.precision = options.precision;
    ex.for_each_index(table.probabilities.size(), [&](std::size_t idx) {
        const ClickPattern pattern = ClickPattern::from_index(idx, n);
        table.probabilities[idx] = pattern_probability(state, pattern, order, inner).value;
    });
    return table;
}

double multimode_vacuum_prob(const GaussianState &state, std::span<const std::size_t> modes) {
    if (modes.empty()) {
        return 1.0;
    }
    std::vector<Eigen::Index> idx;
    idx.reserve(2 * modes.size());
    for (std::size_t m : modes) {
        if (m >= state.n_modes()) {
            throw std::out_of_range("mode index " + std::to_string(m) + " out of range");
        }
        idx.push_back(static_cast<Eigen::Index>(2 * m));
        idx.push_back(static_cast<Eigen::Index>(2 * m + 1));
    }
    const auto dim = static_cast<Eigen::Index>(idx.size());
    const Matrix shifted = state.cov()(idx, idx) + Matrix::Identity(dim, dim);
    const Vector r = state.mean()(idx);
    Eigen::LLT<Matrix> llt(shifted);
    if (llt.info() != Eigen::Success) {
        throw NumericalDomainError("V_B + I is not positive definite");
    }
    const Matrix &l = llt.matrixL();
    double log_det = 0.0;
    for (Eigen::Index i = 0; i < dim; ++i) {
        log_det += 2.0 * std::log(l(i, i));
    }
    const double quad = r.dot(llt.solve(r));
    const double log_p = static_cast<double>(modes.size()) * std::numbers::ln2 - 0.5 * quad - 0.5 * log_det;
    return std::exp(log_p);
}

double inclusion_exclusion_prob(const GaussianState &state, const ClickPattern &pattern, std::size_t limit) {
    const std::size_t n = state.n_modes();
    if (pattern.size() != n) {
        throw std::invalid_argument("pattern length does not match the number of modes");
    }
    const std::vector<std::size_t> clicked = pattern.click_modes();
    if (clicked.size() > limit) {
        throw std::invalid_argument("inclusion-exclusion over " + std::to_string(clicked.size()) +
                                    " clicks exceeds the limit of " + std::to_string(limit));
    }
    std::vector<std::size_t> quiet;
    for (std::size_t i = 0; i < n; ++i) {
        if (!pattern.bits[i]) {
            quiet.push_back(i);
        }
    }
    CompensatedSum sum;
    std::vector<std::size_t> modes;
    const std::size_t subsets = std::size_t{1} << clicked.size();
    for (std::size_t z = 0; z < subsets; ++z) {
        modes = quiet;
        for (std::size_t b = 0; b < clicked.size(); ++b) {
            if ((z >> b) & 1u) {
                modes.push_back(clicked[b]);
            }
        }
        const double term = multimode_vacuum_prob(state, modes);
        sum.add(std::popcount(z) % 2 == 0 ? term : -term);
    }
    return static_cast<double>(sum.value());
}

bool probabilities_agree(double a, double b, double rel, double abs) {
    return std::abs(a - b) <= std::max(rel * std::max(std::abs(a), std::abs(b)), abs);
}

}  // namespace tgbs
