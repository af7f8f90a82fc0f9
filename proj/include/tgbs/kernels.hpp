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
#include <string_view>
#include <vector>

namespace tgbs::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view to_string(Isa isa);
Isa parse_isa(std::string_view name);

/// row[j] <- row[j] - (a * w0[j] + b * w1[j]) for j in [0, n).
///
/// This is the inner loop of the vacuum-conditioning update: every row of
/// the surviving covariance block receives a rank-2 correction built from
/// the two columns coupling it to the measured mode.
using Rank2DowndateFn = void (*)(double *row, const double *w0, const double *w1, double a, double b,
                                 std::size_t n);

/// out[j] <- a * x[j] + b * y[j]
using Combine2Fn = void (*)(double *out, const double *x, const double *y, double a, double b,
                            std::size_t n);

struct KernelTable {
    Isa isa;
    Rank2DowndateFn rank2_downdate;
    Combine2Fn combine2;
};

namespace scalar {
void rank2_downdate(double *row, const double *w0, const double *w1, double a, double b, std::size_t n);
void combine2(double *out, const double *x, const double *y, double a, double b, std::size_t n);
}  // namespace scalar

namespace avx2 {
void rank2_downdate(double *row, const double *w0, const double *w1, double a, double b, std::size_t n);
void combine2(double *out, const double *x, const double *y, double a, double b, std::size_t n);
}  // namespace avx2

namespace neon {
void rank2_downdate(double *row, const double *w0, const double *w1, double a, double b, std::size_t n);
void combine2(double *out, const double *x, const double *y, double a, double b, std::size_t n);
}  // namespace neon

/// ISAs compiled into this build and supported by the running CPU.
std::vector<Isa> available_isas();

bool isa_available(Isa isa);

/// Kernels for a specific ISA; throws std::invalid_argument if unavailable.
const KernelTable &table(Isa isa);

/// The table selected at first use: the widest available ISA, unless the
/// TGBS_ISA environment variable names another one.
const KernelTable &active();

/// Overrides the active selection (tests and benchmarks).
void set_active(Isa isa);

}  // namespace tgbs::kernels
