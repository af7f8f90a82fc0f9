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

#include "tgbs/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "tgbs/rng.hpp"

namespace tgbs {

Graph::Graph(std::size_t n, std::string name) : n_(n), name_(std::move(name)), adj_(n * n, 0) {}

bool Graph::add_edge(std::size_t i, std::size_t j) {
    if (i >= n_ || j >= n_) {
        throw std::out_of_range("vertex index out of range");
    }
    if (i == j) {
        throw std::invalid_argument("self-loops are not allowed");
    }
    if (adj_[i * n_ + j]) {
        return false;
    }
    adj_[i * n_ + j] = adj_[j * n_ + i] = 1;
    ++edges_;
    return true;
}

std::size_t Graph::degree(std::size_t i) const {
    if (i >= n_) {
        throw std::out_of_range("vertex index out of range");
    }
    return static_cast<std::size_t>(std::count(adj_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                                               adj_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_), 1));
}

std::size_t subgraph_edges(const Graph &graph, std::span<const std::size_t> vertices) {
    std::vector<bool> seen(graph.size(), false);
    for (std::size_t v : vertices) {
        if (v >= graph.size()) {
            throw std::out_of_range("vertex index out of range");
        }
        if (seen[v]) {
            throw std::invalid_argument("vertex set contains duplicates");
        }
        seen[v] = true;
    }
    std::size_t count = 0;
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            count += graph.has_edge(vertices[a], vertices[b]);
        }
    }
    return count;
}

std::size_t subgraph_edges(const Graph &graph, std::span<const std::size_t> vertices, std::size_t k) {
    if (vertices.size() != k) {
        throw std::invalid_argument("vertex set has size " + std::to_string(vertices.size()) + ", expected " +
                                    std::to_string(k));
    }
    return subgraph_edges(graph, vertices);
}

Graph complete_graph(std::size_t n) {
    Graph g(n, "K" + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            g.add_edge(i, j);
        }
    }
    return g;
}

PlantedGraph planted_graph(std::uint64_t seed) {
    constexpr std::size_t kBase = 20;
    constexpr std::size_t kPlanted = 10;
    constexpr std::size_t kCross = 8;
    constexpr double kBaseProb = 0.5;
    constexpr double kPlantedProb = 0.875;

    Rng rng = Rng::derive(seed, "planted-graph");
    PlantedGraph out{Graph(kBase + kPlanted, "planted:" + std::to_string(seed)), {}, 0};
    Graph &g = out.graph;
    for (std::size_t i = 0; i < kBase; ++i) {
        for (std::size_t j = i + 1; j < kBase; ++j) {
            if (rng.uniform() < kBaseProb) {
                g.add_edge(i, j);
            }
        }
    }
    for (std::size_t i = 0; i < kPlanted; ++i) {
        for (std::size_t j = i + 1; j < kPlanted; ++j) {
            if (rng.uniform() < kPlantedProb) {
                g.add_edge(kBase + i, kBase + j);
                ++out.planted_edges;
            }
        }
    }
    VertexSet base(kBase);
    VertexSet planted(kPlanted);
    std::iota(base.begin(), base.end(), std::size_t{0});
    std::iota(planted.begin(), planted.end(), kBase);
    std::shuffle(base.begin(), base.end(), rng.engine());
    std::shuffle(planted.begin(), planted.end(), rng.engine());
    for (std::size_t c = 0; c < kCross; ++c) {
        g.add_edge(base[c], planted[c]);
    }
    out.planted.resize(kPlanted);
    std::iota(out.planted.begin(), out.planted.end(), kBase);
    return out;
}

}  // namespace tgbs
