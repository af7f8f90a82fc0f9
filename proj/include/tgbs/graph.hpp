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
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tgbs {

using VertexSet = std::vector<std::size_t>;

/// Undirected simple graph; vertex i corresponds to optical mode i.
class Graph {
  public:
    explicit Graph(std::size_t n, std::string name = {});

    std::size_t size() const noexcept { return n_; }
    const std::string &name() const noexcept { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    bool has_edge(std::size_t i, std::size_t j) const { return adj_[i * n_ + j] != 0; }

    /// Adds {i, j}; returns false if it was already present. Self-loops are rejected.
    bool add_edge(std::size_t i, std::size_t j);

    std::size_t edge_count() const noexcept { return edges_; }
    std::size_t degree(std::size_t i) const;

    /// Row-major 0/1 adjacency matrix.
    std::span<const std::uint8_t> adjacency() const noexcept { return adj_; }

    bool operator==(const Graph &other) const { return n_ == other.n_ && adj_ == other.adj_; }

  private:
    std::size_t n_;
    std::string name_;
    std::vector<std::uint8_t> adj_;
    std::size_t edges_ = 0;
};

/// Number of edges with both endpoints in `vertices`.
std::size_t subgraph_edges(const Graph &graph, std::span<const std::size_t> vertices);

/// Same, additionally requiring |vertices| == k.
std::size_t subgraph_edges(const Graph &graph, std::span<const std::size_t> vertices, std::size_t k);

/// Complete graph on n vertices.
Graph complete_graph(std::size_t n);

/// Planted densest-subgraph instance.
struct PlantedGraph {
    Graph graph;
    /// Vertices of the planted block (20..29).
    VertexSet planted;
    std::size_t planted_edges = 0;
};

/// 30 vertices: G(20, 0.5) on vertices 0-19, a planted G(10, 0.875) block on
/// vertices 20-29, and 8 cross edges pairing 8 random vertices of each part.
PlantedGraph planted_graph(std::uint64_t seed);

struct DimacsParseResult {
    Graph graph;
    std::size_t declared_edges = 0;
    std::vector<std::string> warnings;
};

/// DIMACS clique (.clq) text: "c" comments, one "p edge <n> <m>" line and
/// "e <i> <j>" lines with 1-based vertices. LF or CRLF line endings.
DimacsParseResult parse_dimacs(std::string_view text);
DimacsParseResult read_dimacs_file(const std::string &path);

/// Canonical form: problem line, then edges with i < j in lexicographic order.
std::string emit_dimacs(const Graph &graph);

}  // namespace tgbs
