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

#include <span>
#include <string_view>

namespace tgbs {

/// How mixture probabilities and coefficient sums are accumulated.
enum class Precision {
    /// Neumaier-compensated summation in `long double`.
    kCompensated,
    /// Double-double accumulation with error-free products (~106-bit significand).
    kDoubleDouble,
};

std::string_view to_string(Precision p);
Precision parse_precision(std::string_view name);

struct DoubleDouble {
    double hi = 0.0;
    double lo = 0.0;
};

DoubleDouble two_sum(double a, double b) noexcept;
DoubleDouble two_prod(double a, double b) noexcept;
DoubleDouble operator+(DoubleDouble a, DoubleDouble b) noexcept;
DoubleDouble operator-(DoubleDouble a) noexcept;
DoubleDouble operator-(DoubleDouble a, DoubleDouble b) noexcept;
DoubleDouble operator*(DoubleDouble a, double b) noexcept;
DoubleDouble operator/(DoubleDouble a, DoubleDouble b) noexcept;
inline double to_double(DoubleDouble a) noexcept { return a.hi + a.lo; }

class CompensatedSum {
  public:
    void add(long double x) noexcept;
    void merge(const CompensatedSum &other) noexcept;
    long double value() const noexcept { return sum_ + comp_; }

  private:
    long double sum_ = 0.0L;
    long double comp_ = 0.0L;
};

/// Accumulates products a*b under the selected precision mode.
/// Partial accumulators merge deterministically in caller-chosen order.
class Accumulator {
  public:
    explicit Accumulator(Precision precision = Precision::kCompensated) noexcept : precision_(precision) {}

    void add(double x) noexcept;
    void add_product(double a, double b) noexcept;
    /// Adds a*b with a given as a double-double.
    void add_product(DoubleDouble a, double b) noexcept;
    void merge(const Accumulator &other) noexcept;
    double value() const noexcept;
    DoubleDouble dd_value() const noexcept;
    Precision precision() const noexcept { return precision_; }

  private:
    Precision precision_;
    CompensatedSum compensated_;
    DoubleDouble dd_;
};

double accurate_sum(std::span<const double> values, Precision precision = Precision::kCompensated);

}  // namespace tgbs
