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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"

#include "../test_util.hpp"
#include "tgbs/executor.hpp"
#include "tgbs/sampler.hpp"

using namespace tgbs;

TEST(Oracle, vacuum_distribution) {
    auto t = enumerate_distribution(vacuum_state(3));
    EXPECT_EQ(t.probabilities.size(), 8u);
    EXPECT_EQ(t.probabilities[0], 1.0);
    EXPECT_EQ(t.total(), 1.0);
    EXPECT_EQ(t.mean_clicks(), 0.0);
}

TEST(Oracle, single_squeezed_mode) {
    const std::vector<double> r{squeezing_from_db(8.0)};
    auto t = enumerate_distribution(squeezed_vacuum(r));
    EXPECT_NEAR(t.probabilities[0], 0.687286734438891651540, 1e-14);
    EXPECT_NEAR(t.probabilities[1], 0.312713265561108348460, 1e-14);
}

TEST(Oracle, enumeration_limit) {
    EXPECT_THROW(enumerate_distribution(vacuum_state(11)), std::invalid_argument);
    EXPECT_THROW(inclusion_exclusion_prob(vacuum_state(17), ClickPattern::from_index((1u << 17) - 1, 17)),
                 std::invalid_argument);
}

TEST(Oracle, multimode_vacuum_examples) {
    auto s = testutil::random_gbs_state(3, 1);
    EXPECT_EQ(multimode_vacuum_prob(s, std::vector<std::size_t>{}), 1.0);
    // Product state: joint vacuum factorizes.
    const std::vector<double> r{0.3, 0.7};
    auto sq = squeezed_vacuum(r);
    const std::vector<std::size_t> both{0, 1};
    EXPECT_NEAR(multimode_vacuum_prob(sq, both), 1.0 / (std::cosh(0.3) * std::cosh(0.7)), 1e-14);
    // Thermal 2-mode state V = 3 I: (1/2)^2.
    GaussianState thermal(3.0 * Matrix::Identity(4, 4), Vector::Zero(4));
    EXPECT_NEAR(multimode_vacuum_prob(thermal, both), 0.25, 1e-15);
}

TEST(Oracle, chain_matches_inclusion_exclusion_up_to_eight_modes) {
    const std::array<double, 4> losses{0.0, 1.2, 3.0, 6.0};
    for (std::uint64_t seed = 0; seed < 14; ++seed) {
        const std::size_t n = 2 + seed % 7;
        auto s = testutil::random_gbs_state(n, 500 + seed, 8.0, losses[seed % 4]);
        auto table = enumerate_distribution(s);
        EXPECT_NEAR(table.total(), 1.0, 1e-9);
        for (std::uint64_t i = 0; i < table.probabilities.size(); ++i) {
            const double ie = inclusion_exclusion_prob(s, ClickPattern::from_index(i, n));
            EXPECT_TRUE(probabilities_agree(table.probabilities[i], ie))
                << "n=" << n << " i=" << i << " " << table.probabilities[i] << " vs " << ie;
        }
    }
}

TEST(Oracle, displaced_states_agree) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto s = testutil::random_displaced_state(4, seed, 6.0, 1.2);
        for (std::uint64_t i = 0; i < 16; ++i) {
            auto pat = ClickPattern::from_index(i, 4);
            EXPECT_TRUE(probabilities_agree(pattern_probability(s, pat).value, inclusion_exclusion_prob(s, pat)));
        }
    }
}

TEST(Oracle, marginal_consistency) {
    auto s = testutil::random_gbs_state(5, 42, 8.0, 1.2);
    auto full = enumerate_distribution(s);
    for (std::size_t drop = 0; drop < 5; ++drop) {
        std::vector<std::size_t> keep;
        for (std::size_t m = 0; m < 5; ++m) {
            if (m != drop) {
                keep.push_back(m);
            }
        }
        auto reduced = enumerate_distribution(s.marginal(keep));
        auto summed = full.marginalize(drop);
        ASSERT_EQ(summed.probabilities.size(), reduced.probabilities.size());
        for (std::size_t i = 0; i < summed.probabilities.size(); ++i) {
            EXPECT_NEAR(summed.probabilities[i], reduced.probabilities[i], 1e-12);
        }
    }
}

TEST(Oracle, mean_clicks_decrease_with_loss) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        double prev = 1e9;
        for (double db : {0.0, 1.2, 3.0, 6.0}) {
            auto t = enumerate_distribution(testutil::random_gbs_state(5, seed, 8.0, db));
            EXPECT_LT(t.mean_clicks(), prev);
            prev = t.mean_clicks();
        }
    }
}

TEST(Oracle, parallel_enumeration_identical) {
    auto s = testutil::random_gbs_state(7, 3);
    Executor wide(4, 8);
    RunOptions par;
    par.executor = &wide;
    auto a = enumerate_distribution(s);
    auto b = enumerate_distribution(s, par);
    EXPECT_EQ(a.probabilities, b.probabilities);
}

TEST(Oracle, agreement_predicate) {
    EXPECT_TRUE(probabilities_agree(1.0, 1.0 + 5e-10));
    EXPECT_FALSE(probabilities_agree(1.0, 1.0 + 5e-9));
    EXPECT_TRUE(probabilities_agree(0.0, 5e-13));
    EXPECT_FALSE(probabilities_agree(0.0, 5e-12));
}
