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

#include "tgbs/subgraph_search.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace tgbs {

UniformSubgraphSource::UniformSubgraphSource(std::size_t n, std::size_t k, std::uint64_t seed)
    : n_(n), k_(k), rng_(Rng::derive(seed, "uniform-subgraph")), scratch_(n) {
    if (k > n) {
        throw std::invalid_argument("subgraph size exceeds vertex count");
    }
}

std::optional<VertexSet> UniformSubgraphSource::next() {
    std::iota(scratch_.begin(), scratch_.end(), std::size_t{0});
    for (std::size_t i = 0; i < k_; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n_ - 1);
        std::swap(scratch_[i], scratch_[pick(rng_.engine())]);
    }
    VertexSet out(scratch_.begin(), scratch_.begin() + static_cast<std::ptrdiff_t>(k_));
    std::sort(out.begin(), out.end());
    return out;
}

GbsSubgraphSource::GbsSubgraphSource(const Graph &graph, const EncodingParams &params, double loss_db,
                                     std::size_t k, std::uint64_t seed, std::uint64_t max_draws,
                                     RunOptions options)
    : transmission_(transmission_from_db(loss_db)),
      state_(apply_uniform_loss(encode_graph(graph, params), transmission_)),
      stream_(state_, MeasurementPlan::descending(graph.size(), mix_seed(seed, "gbs-subgraph", 0)), k, max_draws,
              std::move(options)) {}

std::optional<VertexSet> GbsSubgraphSource::next() {
    auto s = stream_.next();
    if (!s) {
        return std::nullopt;
    }
    return s->pattern.click_modes();
}

SearchTrace random_search(SubgraphSource &source, const Graph &graph, std::size_t k, std::size_t budget,
                          std::uint64_t seed, std::optional<std::size_t> stop_at) {
    SearchTrace trace;
    trace.strategy = source.label();
    trace.seed = seed;
    trace.points.reserve(budget);
    std::size_t best = 0;
    for (std::size_t s = 1; s <= budget; ++s) {
        auto set = source.next();
        if (!set) {
            break;
        }
        const std::size_t edges = subgraph_edges(graph, *set, k);
        if (trace.best_set.empty() || edges > best) {
            best = edges;
            trace.best_set = std::move(*set);
        }
        trace.points.push_back({s, best});
        if (stop_at && best >= *stop_at) {
            break;
        }
    }
    return trace;
}

std::vector<double> average_traces(std::span<const SearchTrace> traces, std::size_t budget) {
    std::vector<double> mean(budget, 0.0);
    if (traces.empty()) {
        return mean;
    }
    for (const auto &t : traces) {
        std::size_t last = 0;
        for (std::size_t s = 0; s < budget; ++s) {
            if (s < t.points.size()) {
                last = t.points[s].best_edges;
            }
            mean[s] += static_cast<double>(last);
        }
    }
    for (double &m : mean) {
        m /= static_cast<double>(traces.size());
    }
    return mean;
}

}  // namespace tgbs
