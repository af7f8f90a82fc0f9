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
#include <stdexcept>
#include <string>

namespace tgbs {

std::string_view to_string(Precision p) {
    switch (p) {
        case Precision::kCompensated:
            return "compensated";
        case Precision::kDoubleDouble:
            return "double-double";
    }
    return "unknown";
}

Precision parse_precision(std::string_view name) {
    if (name == "compensated") {
        return Precision::kCompensated;
    }
    if (name == "double-double" || name == "dd") {
        return Precision::kDoubleDouble;
    }
    throw std::invalid_argument("unknown precision mode '" + std::string(name) + "'");
}

DoubleDouble two_sum(double a, double b) noexcept {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

DoubleDouble two_prod(double a, double b) noexcept {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

DoubleDouble operator+(DoubleDouble a, DoubleDouble b) noexcept {
    DoubleDouble s = two_sum(a.hi, b.hi);
    DoubleDouble t = two_sum(a.lo, b.lo);
    double lo = s.lo + t.hi;
    DoubleDouble u = two_sum(s.hi, lo);
    lo = t.lo + u.lo;
    return two_sum(u.hi, lo);
}

DoubleDouble operator-(DoubleDouble a) noexcept { return {-a.hi, -a.lo}; }

DoubleDouble operator-(DoubleDouble a, DoubleDouble b) noexcept { return a + (-b); }

DoubleDouble operator*(DoubleDouble a, double b) noexcept {
    DoubleDouble p = two_prod(a.hi, b);
    p.lo = std::fma(a.lo, b, p.lo);
    return two_sum(p.hi, p.lo);
}

// One Newton correction on the double quotient.
DoubleDouble operator/(DoubleDouble a, DoubleDouble b) noexcept {
    const double q1 = a.hi / b.hi;
    DoubleDouble r = a - b * q1;
    const double q2 = r.hi / b.hi;
    r = r - b * q2;
    const double q3 = r.hi / b.hi;
    return DoubleDouble{q1, 0.0} + DoubleDouble{q2, 0.0} + DoubleDouble{q3, 0.0};
}

void CompensatedSum::add(long double x) noexcept {
    long double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
        comp_ += (sum_ - t) + x;
    } else {
        comp_ += (x - t) + sum_;
    }
    sum_ = t;
}

void CompensatedSum::merge(const CompensatedSum &other) noexcept {
    add(other.sum_);
    add(other.comp_);
}

void Accumulator::add(double x) noexcept {
    if (precision_ == Precision::kDoubleDouble) {
        dd_ = dd_ + DoubleDouble{x, 0.0};
    } else {
        compensated_.add(x);
    }
}

void Accumulator::add_product(double a, double b) noexcept {
    if (precision_ == Precision::kDoubleDouble) {
        dd_ = dd_ + two_prod(a, b);
    } else {
        compensated_.add(static_cast<long double>(a) * static_cast<long double>(b));
    }
}

void Accumulator::add_product(DoubleDouble a, double b) noexcept {
    if (precision_ == Precision::kDoubleDouble) {
        dd_ = dd_ + a * b;
    } else {
        compensated_.add(static_cast<long double>(a.hi) * static_cast<long double>(b));
        compensated_.add(static_cast<long double>(a.lo) * static_cast<long double>(b));
    }
}

void Accumulator::merge(const Accumulator &other) noexcept {
    if (precision_ == Precision::kDoubleDouble) {
        dd_ = dd_ + other.dd_;
    } else {
        compensated_.merge(other.compensated_);
    }
}

double Accumulator::value() const noexcept {
    if (precision_ == Precision::kDoubleDouble) {
        return dd_.hi + dd_.lo;
    }
    return static_cast<double>(compensated_.value());
}

DoubleDouble Accumulator::dd_value() const noexcept {
    if (precision_ == Precision::kDoubleDouble) {
        return dd_;
    }
    const long double v = compensated_.value();
    const double hi = static_cast<double>(v);
    return {hi, static_cast<double>(v - hi)};
}

double accurate_sum(std::span<const double> values, Precision precision) {
    Accumulator acc(precision);
    for (double v : values) {
        acc.add(v);
    }
    return acc.value();
}

}  // namespace tgbs
