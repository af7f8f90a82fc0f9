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

#include "tgbs/sampler.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "tgbs/errors.hpp"
#include "tgbs/rng.hpp"

namespace tgbs {
namespace {

struct ChainResult {
    std::vector<std::uint8_t> bits;
    double prob = 1.0;
    std::size_t peak = 1;
    bool aborted = false;
};

ChainResult run_chain(const GaussianState &state, std::span<const std::size_t> order, const ClickPattern *forced,
                      Rng *rng, std::optional<std::size_t> target, const RunOptions &options) {
    const std::size_t n = state.n_modes();
    ChainResult out;
    out.bits.assign(n, 0);
    StateMixture mixture = init_mixture(state);
    for (std::size_t step = 0; step < order.size(); ++step) {
        if (target) {
            const std::size_t clicks = mixture.clicks();
            if (clicks > *target || clicks + (n - step) < *target) {
                out.aborted = true;
                return out;
            }
        }
        const std::size_t mode = order[step];
        std::optional<std::uint8_t> bit;
        if (forced != nullptr) {
            bit = forced->bits[mode];
        }
        MeasureResult r = measure_mode(mixture, mode, bit, rng, options);
        out.bits[mode] = r.outcome;
        out.prob *= r.probability;
        mixture = std::move(r.mixture);
        out.peak = std::max(out.peak, mixture.branch_count());
        if (options.observer) {
            StepRecord rec;
            rec.step = step + 1;
            rec.mode = mode;
            rec.outcome = r.outcome;
            rec.probability = r.probability;
            rec.branch_count = mixture.branch_count();
            rec.clicks = mixture.clicks();
            rec.remaining_modes = mixture.remaining_modes();
            rec.coefficient_sum = mixture.coefficient_sum(options.precision);
            options.observer(rec);
        }
    }
    if (target && mixture.clicks() != *target) {
        out.aborted = true;
    }
    return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

MeasurementPlan MeasurementPlan::descending(std::size_t n_modes, std::uint64_t seed) {
    MeasurementPlan plan;
    plan.order = descending_order(n_modes);
    plan.seed = seed;
    return plan;
}

void MeasurementPlan::validate(std::size_t n_modes) const {
    if (!is_permutation_of(order, n_modes)) {
        throw std::invalid_argument("measurement order is not a permutation of the modes");
    }
    if (forced && forced->size() != n_modes) {
        throw std::invalid_argument("forced pattern length does not match the number of modes");
    }
}

SampleResult sample(const GaussianState &state, const MeasurementPlan &plan, Rng &rng, const RunOptions &options) {
    plan.validate(state.n_modes());
    const auto start = std::chrono::steady_clock::now();
    ChainResult chain =
        run_chain(state, plan.order, plan.forced ? &*plan.forced : nullptr, &rng, std::nullopt, options);
    SampleResult out;
    out.pattern.bits = std::move(chain.bits);
    out.pattern.order = plan.order;
    out.joint_prob = chain.prob;
    out.peak_branch_count = chain.peak;
    out.wall_ms = elapsed_ms(start);
    return out;
}

SampleResult sample(const GaussianState &state, const MeasurementPlan &plan, const RunOptions &options) {
    Rng rng = Rng::derive(plan.seed, "draw", 0);
    return sample(state, plan, rng, options);
}

PatternProbability pattern_probability(const GaussianState &state, const ClickPattern &pattern,
                                       std::span<const std::size_t> order, const RunOptions &options) {
    if (pattern.size() != state.n_modes()) {
        throw std::invalid_argument("pattern length does not match the number of modes");
    }
    if (!is_permutation_of(order, state.n_modes())) {
        throw std::invalid_argument("measurement order is not a permutation of the modes");
    }
    try {
        ChainResult chain = run_chain(state, order, &pattern, nullptr, std::nullopt, options);
        return {chain.prob, false};
    } catch (const ImpossibleOutcomeError &) {
        return {0.0, true};
    }
}

PatternProbability pattern_probability(const GaussianState &state, const ClickPattern &pattern,
                                       const RunOptions &options) {
    const auto order = pattern.order.empty() ? descending_order(state.n_modes()) : pattern.order;
    return pattern_probability(state, pattern, order, options);
}

PostselectedStream::PostselectedStream(GaussianState state, MeasurementPlan plan, std::size_t target_clicks,
                                       std::uint64_t max_draws, RunOptions options, std::size_t batch_size)
    : state_(std::move(state)),
      plan_(std::move(plan)),
      target_(target_clicks),
      max_draws_(max_draws),
      options_(std::move(options)),
      batch_size_(batch_size) {
    plan_.validate(state_.n_modes());
    if (plan_.forced) {
        throw std::invalid_argument("postselection does not combine with forced outcomes");
    }
    if (target_ > state_.n_modes()) {
        throw std::invalid_argument("target click count exceeds the number of modes");
    }
    if (batch_size_ == 0) {
        const std::size_t workers = options_.executor ? options_.executor->workers() : 1;
        batch_size_ = std::max<std::size_t>(16, 8 * workers);
    }
}

void PostselectedStream::refill() {
    const std::uint64_t begin = next_draw_;
    const std::uint64_t end = std::min<std::uint64_t>(max_draws_, begin + batch_size_);
    if (begin >= end) {
        return;
    }
    std::vector<DrawOutcome> batch(end - begin);
    RunOptions inner;
    inner.precision = options_.precision;
    auto run_draw = [&](std::size_t i) {
        const std::uint64_t index = begin + i;
        const auto start = std::chrono::steady_clock::now();
        ChainResult chain;
        try {
            Rng rng = Rng::derive(plan_.seed, "draw", index);
            chain = run_chain(state_, plan_.order, nullptr, &rng, target_, inner);
        } catch (const PrecisionError &) {
            if (inner.precision == Precision::kDoubleDouble) {
                throw;
            }
            // Heavily cancelling coefficients; replay the same stream in double-double.
            RunOptions retry = inner;
            retry.precision = Precision::kDoubleDouble;
            Rng rng = Rng::derive(plan_.seed, "draw", index);
            chain = run_chain(state_, plan_.order, nullptr, &rng, target_, retry);
        }
        DrawOutcome &d = batch[i];
        d.index = index;
        d.aborted = chain.aborted;
        d.accepted = !chain.aborted;
        if (d.accepted) {
            d.sample.draw_index = index;
            d.sample.pattern.bits = std::move(chain.bits);
            d.sample.pattern.order = plan_.order;
            d.sample.joint_prob = chain.prob;
            d.sample.peak_branch_count = chain.peak;
            d.sample.wall_ms = elapsed_ms(start);
        }
    };
    if (options_.executor != nullptr) {
        options_.executor->for_each_index(batch.size(), run_draw);
    } else {
        for (std::size_t i = 0; i < batch.size(); ++i) {
            run_draw(i);
        }
    }
    next_draw_ = end;
    for (auto &d : batch) {
        pending_.push_back(std::move(d));
    }
}

std::optional<AcceptedSample> PostselectedStream::next() {
    while (true) {
        if (pending_.empty()) {
            refill();
            if (pending_.empty()) {
                return std::nullopt;
            }
        }
        DrawOutcome d = std::move(pending_.front());
        pending_.pop_front();
        ++stats_.draws;
        if (d.aborted) {
            ++stats_.aborted;
        }
        if (d.accepted) {
            ++stats_.accepted;
            return std::move(d.sample);
        }
    }
}

}  // namespace tgbs
