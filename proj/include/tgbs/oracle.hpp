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
#include <vector>

#include "tgbs/click_pattern.hpp"
#include "tgbs/gaussian_state.hpp"
#include "tgbs/mixture.hpp"

namespace tgbs {

inline constexpr std::size_t kEnumerationLimit = 10;
inline constexpr std::size_t kInclusionExclusionLimit = 16;

/// Probability of every click pattern of an n-mode state, indexed by
/// ClickPattern::to_index (bit i = mode i).
struct DistributionTable {
    std::size_t n_modes = 0;
    std::vector<double> probabilities;

    double at(const ClickPattern &pattern) const { return probabilities.at(pattern.to_index()); }
    double total() const;
    /// Sum of P(pattern) * clicks(pattern).
    double mean_clicks() const;
    /// Distribution with mode `mode` summed out; remaining modes keep their relative order.
    DistributionTable marginalize(std::size_t mode) const;
};

/// Evaluates the sequential chain for all 2^n patterns (default order).
/// Refuses n above `limit`.
DistributionTable enumerate_distribution(const GaussianState &state, const RunOptions &options = {},
                                         std::size_t limit = kEnumerationLimit);

/// P(no click on every mode in `modes`), marginalizing all others:
/// 2^|B| exp(-r_B^T (V_B+I)^{-1} r_B / 2) / sqrt(det(V_B+I)), via Cholesky.
double multimode_vacuum_prob(const GaussianState &state, std::span<const std::size_t> modes);

/// P(pattern) = sum over Z subset of S of (-1)^|Z| P_vac(Z u not-S), with S the
/// click set. No sequential conditioning is involved.
double inclusion_exclusion_prob(const GaussianState &state, const ClickPattern &pattern,
                                std::size_t limit = kInclusionExclusionLimit);

/// |a - b| <= max(rel * max(|a|, |b|), abs).
bool probabilities_agree(double a, double b, double rel = 1e-9, double abs = 1e-12);

}  // namespace tgbs
