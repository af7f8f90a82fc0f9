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
#include <cmath>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"

#include "../test_util.hpp"
#include "tgbs/executor.hpp"
#include "tgbs/oracle.hpp"
#include "tgbs/rng.hpp"

using namespace tgbs;

TEST(ClickPatternTest, string_and_index) {
    auto p = ClickPattern::parse("0011");
    EXPECT_EQ(p.clicks(), 2u);
    EXPECT_EQ(p.to_string(), "0011");
    EXPECT_EQ(p.bits, (std::vector<std::uint8_t>{0, 0, 1, 1}));
    EXPECT_EQ(p.to_index(), 0b1100u);
    EXPECT_EQ(ClickPattern::from_index(0b1100, 4), p);
    EXPECT_EQ(p.click_modes(), (std::vector<std::size_t>{2, 3}));
    EXPECT_THROW(ClickPattern::parse("01x"), std::invalid_argument);
    EXPECT_EQ(descending_order(3), (std::vector<std::size_t>{2, 1, 0}));
    const std::vector<std::size_t> bad{0, 0, 1};
    EXPECT_FALSE(is_permutation_of(bad, 3));
}

TEST(Sampler, vacuum_always_all_zero) {
    auto s = vacuum_state(5);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto r = sample(s, MeasurementPlan::descending(5, seed));
        EXPECT_EQ(r.pattern.clicks(), 0u);
        EXPECT_EQ(r.joint_prob, 1.0);
        EXPECT_EQ(r.peak_branch_count, 1u);
    }
}

TEST(Sampler, plan_validation) {
    auto s = vacuum_state(3);
    MeasurementPlan plan;
    plan.order = {0, 1};
    EXPECT_THROW(sample(s, plan), std::invalid_argument);
    plan.order = {0, 1, 1};
    EXPECT_THROW(sample(s, plan), std::invalid_argument);
    plan = MeasurementPlan::descending(3);
    plan.forced = ClickPattern::parse("01");
    EXPECT_THROW(sample(s, plan), std::invalid_argument);
}

TEST(Sampler, forced_plan_reports_pattern_probability) {
    auto s = testutil::random_gbs_state(5, 3);
    auto plan = MeasurementPlan::descending(5);
    plan.forced = ClickPattern::parse("10110");
    auto r = sample(s, plan);
    EXPECT_EQ(r.pattern, *plan.forced);
    EXPECT_EQ(r.peak_branch_count, 8u);
    EXPECT_NEAR(r.joint_prob, inclusion_exclusion_prob(s, *plan.forced), 1e-12);
}

TEST(Sampler, single_mode_marginal_frequencies) {
    const std::vector<double> r{0.4, squeezing_from_db(8.0)};
    auto s = squeezed_vacuum(r);
    constexpr int kDraws = 100000;
    std::array<int, 2> counts{};
    for (int i = 0; i < kDraws; ++i) {
        Rng rng = Rng::derive(99, "draw", i);
        auto res = sample(s, MeasurementPlan::descending(2), rng);
        counts[0] += res.pattern.bits[0];
        counts[1] += res.pattern.bits[1];
    }
    for (int m = 0; m < 2; ++m) {
        const double p = 1.0 - 1.0 / std::cosh(r[m]);
        const double sigma = std::sqrt(p * (1.0 - p) / kDraws);
        EXPECT_NEAR(static_cast<double>(counts[m]) / kDraws, p, 3.0 * sigma) << m;
    }
}

TEST(Sampler, histogram_matches_enumeration_small) {
    auto s = testutil::random_gbs_state(3, 21, 8.0, 1.2);
    auto table = enumerate_distribution(s);
    constexpr int kDraws = 40000;
    std::vector<double> hist(8, 0.0);
    for (int i = 0; i < kDraws; ++i) {
        Rng rng = Rng::derive(5, "draw", i);
        hist[sample(s, MeasurementPlan::descending(3), rng).pattern.to_index()] += 1.0 / kDraws;
    }
    double tv = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        tv += 0.5 * std::abs(hist[i] - table.probabilities[i]);
    }
    EXPECT_LT(tv, 0.02);
}

TEST(Sampler, pattern_probability_vacuum) {
    auto s = vacuum_state(4);
    EXPECT_EQ(pattern_probability(s, ClickPattern::parse("0000")).value, 1.0);
    auto p = pattern_probability(s, ClickPattern::parse("0100"));
    EXPECT_EQ(p.value, 0.0);
    EXPECT_TRUE(p.impossible);
    EXPECT_THROW(pattern_probability(s, ClickPattern::parse("010")), std::invalid_argument);
}

TEST(Sampler, pattern_probability_matches_oracle_six_modes) {
    auto s = testutil::random_gbs_state(6, 31);
    for (std::uint64_t i = 0; i < 64; ++i) {
        auto pat = ClickPattern::from_index(i, 6);
        const double chain = pattern_probability(s, pat).value;
        const double ie = inclusion_exclusion_prob(s, pat);
        EXPECT_TRUE(probabilities_agree(chain, ie)) << pat.to_string() << " " << chain << " " << ie;
    }
}

TEST(Sampler, completeness) {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto s = testutil::random_displaced_state(n, 100 + n, 8.0, n % 2 ? 3.0 : 0.0);
        double total = 0.0;
        for (std::uint64_t i = 0; i < (1u << n); ++i) {
            total += pattern_probability(s, ClickPattern::from_index(i, n)).value;
        }
        EXPECT_NEAR(total, 1.0, 1e-9) << n;
    }
}

TEST(Sampler, order_invariance) {
    auto s = testutil::random_displaced_state(5, 17, 8.0, 1.2);
    Rng rng(4);
    for (std::uint64_t i = 0; i < 32; ++i) {
        auto pat = ClickPattern::from_index(i, 5);
        const double ref = pattern_probability(s, pat).value;
        for (int t = 0; t < 4; ++t) {
            std::vector<std::size_t> order(5);
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng.engine());
            EXPECT_TRUE(probabilities_agree(pattern_probability(s, pat, order).value, ref));
        }
    }
}

TEST(Sampler, deterministic_for_fixed_seed) {
    auto s = testutil::random_gbs_state(6, 2);
    Executor wide(3, 2);
    RunOptions par;
    par.executor = &wide;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto a = sample(s, MeasurementPlan::descending(6, seed));
        auto b = sample(s, MeasurementPlan::descending(6, seed));
        auto c = sample(s, MeasurementPlan::descending(6, seed), par);
        EXPECT_EQ(a.pattern, b.pattern);
        EXPECT_EQ(a.joint_prob, b.joint_prob);
        EXPECT_EQ(a.pattern, c.pattern);
    }
}

TEST(Sampler, observer_sees_every_step) {
    auto s = testutil::random_gbs_state(4, 8);
    std::vector<StepRecord> steps;
    RunOptions opts;
    opts.observer = [&](const StepRecord &r) { steps.push_back(r); };
    auto res = sample(s, MeasurementPlan::descending(4, 3), opts);
    ASSERT_EQ(steps.size(), 4u);
    double joint = 1.0;
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(steps[i].step, i + 1);
        EXPECT_EQ(steps[i].mode, 3 - i);
        EXPECT_EQ(steps[i].branch_count, std::size_t{1} << steps[i].clicks);
        joint *= steps[i].probability;
    }
    EXPECT_EQ(joint, res.joint_prob);
}

TEST(Postselection, vacuum_target_zero_accepts_everything) {
    PostselectedStream stream(vacuum_state(4), MeasurementPlan::descending(4, 1), 0, 50);
    int n = 0;
    while (auto s = stream.next()) {
        EXPECT_EQ(s->pattern.clicks(), 0u);
        ++n;
    }
    EXPECT_EQ(n, 50);
    EXPECT_EQ(stream.stats().acceptance_fraction(), 1.0);
}

TEST(Postselection, accepted_patterns_match_full_draws) {
    auto s = testutil::random_gbs_state(6, 14, 8.0);
    auto plan = MeasurementPlan::descending(6, 77);
    PostselectedStream stream(s, plan, 2, 400);
    std::uint64_t accepted = 0;
    std::uint64_t expected = 0;
    std::vector<ClickPattern> full;
    for (std::uint64_t i = 0; i < 400; ++i) {
        Rng rng = Rng::derive(77, "draw", i);
        auto r = sample(s, plan, rng);
        if (r.pattern.clicks() == 2) {
            full.push_back(r.pattern);
            ++expected;
        }
    }
    while (auto a = stream.next()) {
        ASSERT_LT(accepted, full.size());
        EXPECT_EQ(a->pattern, full[accepted]);
        EXPECT_EQ(a->pattern.clicks(), 2u);
        ++accepted;
    }
    EXPECT_EQ(accepted, expected);
    EXPECT_EQ(stream.stats().draws, 400u);
}

TEST(Postselection, independent_of_batch_and_workers) {
    auto s = testutil::random_gbs_state(6, 9);
    auto plan = MeasurementPlan::descending(6, 5);
    Executor wide(3);
    RunOptions par;
    par.executor = &wide;
    PostselectedStream a(s, plan, 3, 300, {}, 1);
    PostselectedStream b(s, plan, 3, 300, par, 37);
    while (true) {
        auto x = a.next();
        auto y = b.next();
        ASSERT_EQ(x.has_value(), y.has_value());
        if (!x) {
            break;
        }
        EXPECT_EQ(x->draw_index, y->draw_index);
        EXPECT_EQ(x->pattern, y->pattern);
        EXPECT_EQ(x->joint_prob, y->joint_prob);
    }
    EXPECT_EQ(a.stats().accepted, b.stats().accepted);
}

TEST(Postselection, accepted_frequency_matches_conditional_distribution) {
    auto s = testutil::random_gbs_state(4, 23, 8.0);
    auto table = enumerate_distribution(s);
    double p2 = 0.0;
    for (std::uint64_t i = 0; i < 16; ++i) {
        if (std::popcount(i) == 2) {
            p2 += table.probabilities[i];
        }
    }
    PostselectedStream stream(s, MeasurementPlan::descending(4, 8), 2, 20000);
    std::vector<double> hist(16, 0.0);
    std::uint64_t n = 0;
    while (auto a = stream.next()) {
        hist[a->pattern.to_index()] += 1.0;
        ++n;
    }
    ASSERT_GT(n, 1000u);
    EXPECT_NEAR(stream.stats().acceptance_fraction(), p2, 4.0 * std::sqrt(p2 * (1 - p2) / 20000));
    double tv = 0.0;
    for (std::uint64_t i = 0; i < 16; ++i) {
        if (std::popcount(i) == 2) {
            tv += 0.5 * std::abs(hist[i] / n - table.probabilities[i] / p2);
        }
    }
    EXPECT_LT(tv, 0.05);
}

TEST(Postselection, rejects_bad_target) {
    EXPECT_THROW(PostselectedStream(vacuum_state(3), MeasurementPlan::descending(3), 4, 10),
                 std::invalid_argument);
}

TEST(Postselection, zero_acceptances_reported) {
    PostselectedStream stream(vacuum_state(3), MeasurementPlan::descending(3), 2, 20);
    EXPECT_FALSE(stream.next().has_value());
    EXPECT_EQ(stream.stats().draws, 20u);
    EXPECT_EQ(stream.stats().accepted, 0u);
    EXPECT_TRUE(stream.exhausted());
}
