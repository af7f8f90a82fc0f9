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

#include "tgbs/resources.hpp"

#include <bit>
#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

namespace tgbs {

void ResourceModel::validate() const {
    if (!(eta > 0.0) || bytes_per_scalar == 0 || !(node_memory_gb > 0.0) || node_cores == 0) {
        throw std::invalid_argument("resource model parameters must be positive");
    }
}

double memory_at_step(const ResourceModel &model, std::size_t modes, std::size_t clicks, std::size_t step) {
    model.validate();
    if (step > modes) {
        throw std::invalid_argument("step " + std::to_string(step) + " exceeds mode count " + std::to_string(modes));
    }
    if (clicks > step) {
        throw std::invalid_argument("clicks cannot exceed the number of measured modes");
    }
    const double side = static_cast<double>(modes - step);
    return model.eta * 4.0 * side * side * std::ldexp(static_cast<double>(model.bytes_per_scalar),
                                                      static_cast<int>(clicks) - 30);
}

double peak_memory_worst_case(const ResourceModel &model, std::size_t modes, std::size_t clicks) {
    if (clicks > modes) {
        throw std::invalid_argument("clicks cannot exceed modes");
    }
    return memory_at_step(model, modes, clicks, clicks);
}

NodeCount node_count(const ResourceModel &model, double memory_gb) {
    model.validate();
    if (!(memory_gb >= 0.0) || !std::isfinite(memory_gb)) {
        throw std::invalid_argument("memory must be finite and non-negative");
    }
    NodeCount out;
    out.minimum = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(memory_gb / model.node_memory_gb)));
    out.power_of_two = std::bit_ceil(out.minimum);
    return out;
}

double RuntimeFit::extrapolate(double clicks) const { return std::exp2(slope * clicks + intercept); }

RuntimeFit fit_runtime(std::span<const RuntimeObservation> observations) {
    std::set<double> distinct;
    for (const auto &o : observations) {
        if (!(o.cpu_hours > 0.0) || !std::isfinite(o.cpu_hours)) {
            throw std::invalid_argument("cpu hours must be positive");
        }
        distinct.insert(o.clicks);
    }
    if (distinct.size() < 3) {
        throw std::invalid_argument("runtime fit needs at least 3 distinct click counts");
    }
    const double n = static_cast<double>(observations.size());
    double mx = 0.0;
    double my = 0.0;
    for (const auto &o : observations) {
        mx += o.clicks;
        my += std::log2(o.cpu_hours);
    }
    mx /= n;
    my /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (const auto &o : observations) {
        const double dx = o.clicks - mx;
        sxy += dx * (std::log2(o.cpu_hours) - my);
        sxx += dx * dx;
    }
    RuntimeFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    for (const auto &o : observations) {
        fit.residuals.push_back(std::log2(o.cpu_hours) - (fit.slope * o.clicks + fit.intercept));
    }
    return fit;
}

std::vector<RuntimeObservation> titan_runtime_observations() {
    std::vector<RuntimeObservation> out;
    for (const auto &row : kTitanWorstCase) {
        out.push_back({static_cast<double>(row.clicks), row.cpu_hours});
    }
    return out;
}

LiveMemoryMonitor::LiveMemoryMonitor(ResourceModel model, std::size_t modes) : model_(model), modes_(modes) {
    model_.validate();
    series_.push_back({0, 1, 0, memory_at_step(model_, modes_, 0, 0)});
}

StepObserver LiveMemoryMonitor::observer() {
    return [this](const StepRecord &rec) {
        series_.push_back({rec.step, rec.branch_count, rec.clicks, memory_at_step(model_, modes_, rec.clicks, rec.step)});
    };
}

std::size_t LiveMemoryMonitor::peak_branch_count() const {
    std::size_t peak = 0;
    for (const auto &p : series_) {
        peak = std::max(peak, p.branch_count);
    }
    return peak;
}

double LiveMemoryMonitor::peak_modeled_gb() const {
    double peak = 0.0;
    for (const auto &p : series_) {
        peak = std::max(peak, p.modeled_gb);
    }
    return peak;
}

void LiveMemoryMonitor::write_csv(std::ostream &out) const {
    out << "step,branch_count,clicks,modeled_gb\n";
    for (const auto &p : series_) {
        out << p.step << ',' << p.branch_count << ',' << p.clicks << ',' << p.modeled_gb << '\n';
    }
}

}  // namespace tgbs
