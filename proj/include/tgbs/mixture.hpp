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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tgbs/executor.hpp"
#include "tgbs/gaussian_state.hpp"
#include "tgbs/precision.hpp"

namespace tgbs {

class Rng;

/// Emitted by the sampler after every measurement step.
struct StepRecord {
    std::size_t step = 0;  // 1-based count of measured modes
    std::size_t mode = 0;
    std::uint8_t outcome = 0;
    double probability = 1.0;
    std::size_t branch_count = 1;
    std::size_t clicks = 0;
    std::size_t remaining_modes = 0;
    double coefficient_sum = 1.0;
};

using StepObserver = std::function<void(const StepRecord &)>;

struct RunOptions {
    Precision precision = Precision::kCompensated;
    /// Branch-level parallelism; nullptr runs serially.
    const Executor *executor = nullptr;
    /// Called from the coordinating thread only.
    StepObserver observer;
};

struct WeightedBranch {
    double coeff;
    GaussianState state;
};

struct MeasurementRecord {
    std::size_t mode;
    std::uint8_t outcome;
};

/// Conditional state as a signed combination of Gaussian branches.
///
/// Branches live in one contiguous pool of uniform records
/// [cov (dim*dim) | mean (dim) | coeff hi | coeff lo | padding], dim = 2 * remaining_modes.
/// Measurement never modifies a pool; it writes a new, smaller one.
class StateMixture {
  public:
    static StateMixture from_state(const GaussianState &state);

    std::size_t remaining_modes() const noexcept { return labels_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t branch_count() const noexcept { return count_; }
    std::size_t clicks() const noexcept { return clicks_; }
    std::size_t stride() const noexcept { return stride_; }

    /// Original labels of the unmeasured modes, in buffer order.
    const std::vector<std::size_t> &remaining_labels() const noexcept { return labels_; }
    const std::vector<MeasurementRecord> &history() const noexcept { return history_; }

    /// Buffer position of original mode `mode`; throws if already measured.
    std::size_t position_of(std::size_t mode) const;

    double coeff(std::size_t k) const { return to_double(coeff_dd(k)); }
    /// Coefficient as an unevaluated double-double sum.
    DoubleDouble coeff_dd(std::size_t k) const {
        const double *c = pool_.data() + k * stride_ + dim_ * dim_ + dim_;
        return {c[0], c[1]};
    }
    const double *cov_data(std::size_t k) const { return pool_.data() + k * stride_; }
    const double *mean_data(std::size_t k) const { return pool_.data() + k * stride_ + dim_ * dim_; }

    /// Materializes branch k (requires at least one remaining mode).
    WeightedBranch branch(std::size_t k) const;

    double coefficient_sum(Precision precision = Precision::kCompensated) const;

    /// Bytes held by the branch pool.
    std::size_t pool_bytes() const noexcept { return pool_.size() * sizeof(double); }

  private:
    friend struct MixtureBuilder;

    StateMixture() = default;

    std::vector<std::size_t> labels_;
    std::size_t dim_ = 0;
    std::size_t stride_ = 0;
    std::size_t count_ = 0;
    std::size_t clicks_ = 0;
    std::vector<double> pool_;
    std::vector<MeasurementRecord> history_;
};

inline StateMixture init_mixture(const GaussianState &state) { return StateMixture::from_state(state); }

/// p = sum_k a_k q_k, the probability that `mode` does NOT click.
/// Throws PrecisionError if p leaves [-tol, 1 + tol], tol = kProbabilityTol * max(1, sum_k |a_k q_k|).
double no_click_probability(const StateMixture &mixture, std::size_t mode, const RunOptions &options = {});

struct MeasureResult {
    std::uint8_t outcome;
    double probability;
    StateMixture mixture;
};

/// Measures `mode` with a threshold detector.
///
/// With `forced` empty the outcome is drawn from `rng` (which must then be
/// non-null); otherwise the given outcome is imposed and its probability
/// reported. No-click keeps M branches with coefficients a_k q_k / p; click
/// yields 2M branches (a_k / (1-p), unconditioned) and (-a_k q_k / (1-p),
/// vacuum-conditioned). Coefficients are updated in double-double arithmetic
/// whatever the precision mode, since they can reach sum |a_k| >> 1 while
/// still summing to 1. Throws ImpossibleOutcomeError if a forced outcome has
/// probability below that tolerance, and PrecisionError if the coefficient
/// sum drifts from 1 by more than kNormTol.
MeasureResult measure_mode(const StateMixture &mixture, std::size_t mode, std::optional<std::uint8_t> forced,
                           Rng *rng, const RunOptions &options = {});

}  // namespace tgbs
