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

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tgbs/mixture.hpp"

namespace tgbs {

/// Memory model of the branching sampler.
struct ResourceModel {
    /// Overhead factor for temporaries created during a step.
    double eta = 2.0;
    /// 16 = quad precision.
    std::size_t bytes_per_scalar = 16;
    /// Memory per compute node, GB.
    double node_memory_gb = 32.0;
    std::size_t node_cores = 16;

    void validate() const;
};

/// eta * 4 (modes - step)^2 * 2^clicks * bytes_per_scalar / 2^30 gigabytes:
/// storage of the mixture after `step` measurements containing `clicks` clicks.
double memory_at_step(const ResourceModel &model, std::size_t modes, std::size_t clicks, std::size_t step);

/// Largest per-step memory over all trajectories with `clicks` clicks, reached
/// when every click comes first (step == clicks).
double peak_memory_worst_case(const ResourceModel &model, std::size_t modes, std::size_t clicks);

struct NodeCount {
    std::uint64_t minimum = 1;       // ceil(memory / node_memory), at least 1
    std::uint64_t power_of_two = 1;  // smallest power of two >= minimum
};

NodeCount node_count(const ResourceModel &model, double memory_gb);

struct RuntimeObservation {
    double clicks;
    double cpu_hours;
};

/// Least-squares line through (clicks, log2 cpu_hours).
struct RuntimeFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::vector<double> residuals;

    double extrapolate(double clicks) const;
};

RuntimeFit fit_runtime(std::span<const RuntimeObservation> observations);

/// Worst-case (all clicks first) CPU-hours measured on Titan for modes = 2 m^2.
struct TitanReference {
    std::size_t modes;
    std::size_t clicks;
    std::uint64_t nodes;
    double cpu_hours;
    double walltime_hours;
};

inline constexpr std::array<TitanReference, 6> kTitanWorstCase{{
    {200, 10, 1, 1.81, 0.11},
    {288, 12, 4, 21.86, 0.68},
    {392, 14, 32, 250.17, 0.97},
    {512, 16, 128, 2028.91, 1.98},
    {624, 18, 1024, 15612.79, 1.90},
    {800, 20, 8192, 239773.95, 1.83},
}};

std::vector<RuntimeObservation> titan_runtime_observations();

struct MemorySeriesPoint {
    std::size_t step = 0;
    std::size_t branch_count = 1;
    std::size_t clicks = 0;
    double modeled_gb = 0.0;
};

/// Records per-step branch counts of a sampler run and the modeled memory of
/// each step. Attach via RunOptions::observer.
class LiveMemoryMonitor {
  public:
    LiveMemoryMonitor(ResourceModel model, std::size_t modes);

    StepObserver observer();

    const std::vector<MemorySeriesPoint> &series() const noexcept { return series_; }
    std::size_t peak_branch_count() const;
    double peak_modeled_gb() const;

    /// CSV with columns step,branch_count,clicks,modeled_gb.
    void write_csv(std::ostream &out) const;

  private:
    ResourceModel model_;
    std::size_t modes_;
    std::vector<MemorySeriesPoint> series_;
};

}  // namespace tgbs
