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
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "tgbs/click_pattern.hpp"
#include "tgbs/gaussian_state.hpp"
#include "tgbs/mixture.hpp"

namespace tgbs {

class Rng;

struct MeasurementPlan {
    /// Permutation of mode indices; default is descending (last mode first).
    std::vector<std::size_t> order;
    /// When set, every outcome is imposed instead of drawn (benchmark mode).
    std::optional<ClickPattern> forced;
    std::uint64_t seed = 0;

    static MeasurementPlan descending(std::size_t n_modes, std::uint64_t seed = 0);
    void validate(std::size_t n_modes) const;
};

struct SampleResult {
    ClickPattern pattern;
    double joint_prob = 1.0;
    std::size_t peak_branch_count = 1;
    double wall_ms = 0.0;
};

/// One exact sample by sequential threshold measurement along plan.order.
/// The random stream is Rng::derive(plan.seed, "draw", 0).
SampleResult sample(const GaussianState &state, const MeasurementPlan &plan, const RunOptions &options = {});
SampleResult sample(const GaussianState &state, const MeasurementPlan &plan, Rng &rng,
                    const RunOptions &options = {});

struct PatternProbability {
    double value = 0.0;
    /// Set when some step had (numerically) zero probability; value is then 0.
    bool impossible = false;
};

/// Product of the conditional outcome probabilities along `order`.
PatternProbability pattern_probability(const GaussianState &state, const ClickPattern &pattern,
                                       std::span<const std::size_t> order, const RunOptions &options = {});
PatternProbability pattern_probability(const GaussianState &state, const ClickPattern &pattern,
                                       const RunOptions &options = {});

struct PostselectionStats {
    std::uint64_t draws = 0;
    std::uint64_t accepted = 0;
    std::uint64_t aborted = 0;

    double acceptance_fraction() const noexcept {
        return draws == 0 ? 0.0 : static_cast<double>(accepted) / static_cast<double>(draws);
    }
};

struct AcceptedSample {
    std::uint64_t draw_index = 0;
    ClickPattern pattern;
    double joint_prob = 1.0;
    std::size_t peak_branch_count = 1;
    double wall_ms = 0.0;
};

/// Draws samples and yields only those with exactly `target_clicks` clicks.
///
/// Draw i uses stream Rng::derive(plan.seed, "draw", i), so the accepted
/// sequence does not depend on batching or worker count. A draw is abandoned
/// as soon as it has more than `target_clicks` clicks or can no longer reach
/// it; such draws are outside the postselection set either way. Batches of
/// draws run concurrently on options.executor. A draw that hits PrecisionError
/// is replayed once from the start of its stream in double-double.
class PostselectedStream {
  public:
    PostselectedStream(GaussianState state, MeasurementPlan plan, std::size_t target_clicks,
                       std::uint64_t max_draws, RunOptions options = {}, std::size_t batch_size = 0);

    /// Next accepted sample, or nullopt once max_draws draws are consumed.
    std::optional<AcceptedSample> next();

    const PostselectionStats &stats() const noexcept { return stats_; }
    bool exhausted() const noexcept { return stats_.draws >= max_draws_ && pending_.empty(); }
    std::size_t target_clicks() const noexcept { return target_; }

  private:
    struct DrawOutcome {
        std::uint64_t index;
        bool accepted;
        bool aborted;
        AcceptedSample sample;
    };

    void refill();

    GaussianState state_;
    MeasurementPlan plan_;
    std::size_t target_;
    std::uint64_t max_draws_;
    RunOptions options_;
    std::size_t batch_size_;
    std::uint64_t next_draw_ = 0;
    std::deque<DrawOutcome> pending_;
    PostselectionStats stats_;
};

}  // namespace tgbs
