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
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tgbs/encoding.hpp"
#include "tgbs/graph.hpp"
#include "tgbs/rng.hpp"
#include "tgbs/sampler.hpp"

namespace tgbs {

/// Single-consumer stream of candidate vertex sets.
class SubgraphSource {
  public:
    virtual ~SubgraphSource() = default;
    /// nullopt once the source is exhausted.
    virtual std::optional<VertexSet> next() = 0;
    virtual std::string label() const = 0;
};

/// i.i.d. uniformly random k-subsets of {0..n-1}, sorted ascending.
class UniformSubgraphSource final : public SubgraphSource {
  public:
    UniformSubgraphSource(std::size_t n, std::size_t k, std::uint64_t seed);
    std::optional<VertexSet> next() override;
    std::string label() const override { return "uniform"; }

  private:
    std::size_t n_;
    std::size_t k_;
    Rng rng_;
    std::vector<std::size_t> scratch_;
};

/// Threshold-GBS samples of the encoded graph postselected on k clicks;
/// clicked modes become the vertex set. Loss is uniform, T = 10^{-loss_db/10}.
class GbsSubgraphSource final : public SubgraphSource {
  public:
    GbsSubgraphSource(const Graph &graph, const EncodingParams &params, double loss_db, std::size_t k,
                      std::uint64_t seed, std::uint64_t max_draws, RunOptions options = {});
    std::optional<VertexSet> next() override;
    std::string label() const override { return "gbs"; }

    const PostselectionStats &stats() const noexcept { return stream_.stats(); }
    double transmission() const noexcept { return transmission_; }
    const GaussianState &state() const noexcept { return state_; }

  private:
    double transmission_;
    GaussianState state_;
    PostselectedStream stream_;
};

struct TracePoint {
    std::size_t samples = 0;
    std::size_t best_edges = 0;
};

struct SearchTrace {
    std::string strategy;
    std::uint64_t seed = 0;
    std::vector<TracePoint> points;
    VertexSet best_set;

    std::size_t best_edges() const noexcept { return points.empty() ? 0 : points.back().best_edges; }
    std::size_t samples() const noexcept { return points.empty() ? 0 : points.back().samples; }
};

/// Keeps the densest set seen so far; one trace point per consumed sample.
/// Stops at `budget` samples, when the source runs dry, or (optionally) once
/// `stop_at` edges are found.
SearchTrace random_search(SubgraphSource &source, const Graph &graph, std::size_t k, std::size_t budget,
                          std::uint64_t seed = 0, std::optional<std::size_t> stop_at = std::nullopt);

/// Mean best-edge count at samples = 1..budget over several traces. A trace
/// that ended early contributes its final value to later points.
std::vector<double> average_traces(std::span<const SearchTrace> traces, std::size_t budget);

}  // namespace tgbs
