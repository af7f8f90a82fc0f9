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

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "tgbs/errors.hpp"
#include "tgbs/graph.hpp"

namespace tgbs {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') {
            ++j;
        }
        if (j > i) {
            out.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line_no, const char *what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line_no, std::string("expected a non-negative integer for ") + what + ", got '" +
                                      std::string(tok) + "'");
    }
    return value;
}

}  // namespace

DimacsParseResult parse_dimacs(std::string_view text) {
    std::optional<Graph> graph;
    std::size_t declared = 0;
    std::size_t duplicates = 0;
    std::vector<std::string> warnings;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        for (char c : line) {
            if (static_cast<unsigned char>(c) >= 0x80 || (c < 0x20 && c != '\t')) {
                throw ParseError(line_no, "non-ASCII content; binary DIMACS files are not supported");
            }
        }
        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0] == "c") {
            continue;
        }
        if (tokens[0] == "p") {
            if (graph) {
                throw ParseError(line_no, "duplicate problem line");
            }
            if (tokens.size() != 4) {
                throw ParseError(line_no, "problem line must read 'p edge <n> <m>'");
            }
            if (tokens[1] != "edge" && tokens[1] != "col") {
                throw ParseError(line_no, "unsupported problem type '" + std::string(tokens[1]) +
                                              "'; only the clique edge format is accepted");
            }
            graph.emplace(parse_count(tokens[2], line_no, "vertex count"));
            declared = parse_count(tokens[3], line_no, "edge count");
        } else if (tokens[0] == "e") {
            if (!graph) {
                throw ParseError(line_no, "edge line before the problem line");
            }
            if (tokens.size() != 3) {
                throw ParseError(line_no, "edge line must read 'e <i> <j>'");
            }
            const std::size_t i = parse_count(tokens[1], line_no, "vertex");
            const std::size_t j = parse_count(tokens[2], line_no, "vertex");
            if (i < 1 || j < 1 || i > graph->size() || j > graph->size()) {
                throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(graph->size()));
            }
            if (i == j) {
                throw ParseError(line_no, "self-loop on vertex " + std::to_string(i));
            }
            if (!graph->add_edge(i - 1, j - 1)) {
                ++duplicates;
            }
        } else if (tokens[0] == "n") {
            throw ParseError(line_no, "vertex weights are not supported (weighted DIMACS)");
        } else {
            throw ParseError(line_no, "unrecognized line type '" + std::string(tokens[0]) + "'");
        }
    }
    if (!graph) {
        throw ParseError(line_no, "missing problem line");
    }
    if (graph->edge_count() != declared) {
        warnings.push_back("problem line declares " + std::to_string(declared) + " edges, found " +
                           std::to_string(graph->edge_count()) + " distinct edges");
    }
    if (duplicates > 0) {
        warnings.push_back(std::to_string(duplicates) + " duplicate edge line(s) collapsed");
    }
    return {std::move(*graph), declared, std::move(warnings)};
}

DimacsParseResult read_dimacs_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open graph file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    DimacsParseResult result = parse_dimacs(buf.str());
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos) {
        name = name.substr(slash + 1);
    }
    if (auto dot = name.rfind(".clq"); dot != std::string::npos && dot + 4 == name.size()) {
        name = name.substr(0, dot);
    }
    result.graph.set_name(name);
    return result;
}

std::string emit_dimacs(const Graph &graph) {
    std::ostringstream out;
    out << "p edge " << graph.size() << ' ' << graph.edge_count() << '\n';
    for (std::size_t i = 0; i < graph.size(); ++i) {
        for (std::size_t j = i + 1; j < graph.size(); ++j) {
            if (graph.has_edge(i, j)) {
                out << "e " << i + 1 << ' ' << j + 1 << '\n';
            }
        }
    }
    return out.str();
}

}  // namespace tgbs
