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

#include "tgbs/precision.hpp"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"

#include "tgbs/rng.hpp"

using namespace tgbs;

TEST(Precision, names) {
    EXPECT_EQ(parse_precision("compensated"), Precision::kCompensated);
    EXPECT_EQ(parse_precision("double-double"), Precision::kDoubleDouble);
    EXPECT_EQ(parse_precision("dd"), Precision::kDoubleDouble);
    EXPECT_EQ(to_string(Precision::kDoubleDouble), "double-double");
    EXPECT_THROW(parse_precision("quad"), std::invalid_argument);
}

TEST(Precision, two_sum_and_two_prod_are_exact) {
    auto s = two_sum(1.0, 1e-20);
    EXPECT_EQ(s.hi, 1.0);
    EXPECT_EQ(s.lo, 1e-20);
    const double a = 1.0 + std::ldexp(1.0, -30);
    auto p = two_prod(a, a);
    EXPECT_EQ(p.hi, 1.0 + std::ldexp(1.0, -29));
    EXPECT_EQ(p.lo, std::ldexp(1.0, -60));
}

TEST(Precision, cancellation_recovered) {
    const std::vector<double> values{1e16, 1.0, -1e16, 1.0, 1e-3};
    double naive = 0.0;
    for (double v : values) {
        naive += v;
    }
    EXPECT_NE(naive, 2.001);
    EXPECT_DOUBLE_EQ(accurate_sum(values, Precision::kCompensated), 2.001);
    EXPECT_DOUBLE_EQ(accurate_sum(values, Precision::kDoubleDouble), 2.001);
}

TEST(Precision, alternating_branch_coefficients) {
    // Signed coefficients of the size produced by many clicks.
    std::vector<double> values;
    double exact = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const double big = std::ldexp(1.0, 40) * (k % 7 + 1);
        values.push_back(big);
        values.push_back(-big);
        values.push_back(1e-3);
        exact += 1e-3;
    }
    EXPECT_NEAR(accurate_sum(values, Precision::kCompensated), exact, 1e-12);
    EXPECT_NEAR(accurate_sum(values, Precision::kDoubleDouble), exact, 1e-12);
}

TEST(Precision, accumulator_products) {
    for (Precision p : {Precision::kCompensated, Precision::kDoubleDouble}) {
        Accumulator acc(p);
        acc.add_product(2.0, -1.0);
        acc.add_product(-1.0, -0.5);
        acc.add_product(3.0, 0.5);
        EXPECT_DOUBLE_EQ(acc.value(), 0.0);
        Accumulator lin(p);
        lin.add_product(2.0, 0.5);
        lin.add_product(-1.0, 0.3);
        EXPECT_NEAR(lin.value(), 0.7, 1e-16);
    }
}

TEST(Precision, merge_in_chunk_order_is_deterministic) {
    Rng rng(3);
    std::vector<double> values(10000);
    for (double &v : values) {
        v = (rng.uniform() - 0.5) * std::ldexp(1.0, static_cast<int>(rng.next_u64() % 60) - 30);
    }
    for (Precision p : {Precision::kCompensated, Precision::kDoubleDouble}) {
        Accumulator whole(p);
        for (double v : values) {
            whole.add(v);
        }
        Accumulator merged_a(p);
        Accumulator merged_b(p);
        for (std::size_t chunk = 0; chunk < values.size(); chunk += 64) {
            Accumulator part(p);
            for (std::size_t i = chunk; i < std::min(values.size(), chunk + 64); ++i) {
                part.add(values[i]);
            }
            merged_a.merge(part);
            Accumulator again(p);
            for (std::size_t i = chunk; i < std::min(values.size(), chunk + 64); ++i) {
                again.add(values[i]);
            }
            merged_b.merge(again);
        }
        EXPECT_EQ(merged_a.value(), merged_b.value());
        EXPECT_NEAR(merged_a.value(), whole.value(), 1e-15 * std::ldexp(1.0, 30));
    }
}

TEST(Precision, double_double_division_and_scaling) {
    const DoubleDouble third = DoubleDouble{1.0, 0.0} / DoubleDouble{3.0, 0.0};
    const DoubleDouble back = third * 3.0 - DoubleDouble{1.0, 0.0};
    EXPECT_LE(std::abs(to_double(back)), 1e-31);
    // (1 + 2^-60) survives only in the low word.
    const DoubleDouble x = DoubleDouble{1.0, std::ldexp(1.0, -60)};
    const DoubleDouble y = x / DoubleDouble{1.0, 0.0};
    EXPECT_EQ(y.hi, 1.0);
    EXPECT_EQ(y.lo, std::ldexp(1.0, -60));
    EXPECT_EQ(to_double(-(x - x)), 0.0);
}
