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

#include <filesystem>
#include <optional>
#include <ostream>

#include "cli_common.hpp"
#include "tgbs/encoding.hpp"
#include "tgbs/graph.hpp"
#include "tgbs/precision.hpp"
#include "tgbs/rng.hpp"
#include "tgbs/subgraph_search.hpp"

namespace tgbs::cli {
namespace {

struct DensestOptions {
    std::string graph = "planted:1";
    std::size_t k = 10;
    std::string strategy = "gbs";
    double loss_db = 0.0;
    std::size_t budget = 2000;
    std::uint64_t seed = 0;
    std::size_t runs = 1;
    std::optional<double> mean_photons;
    std::optional<double> scale;
    std::uint64_t max_draws = 0;
    std::string trace_out = "-";
    CommonOptions common;
};

struct GraphSpec {
    Graph graph{0};
    // Edge count of the known optimum of size planted_size, when there is one.
    std::optional<std::size_t> planted_edges;
    std::size_t planted_size = 0;
};

std::uint64_t parse_seed(const std::string &text) {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(text, &pos);
    if (pos != text.size()) {
        throw std::invalid_argument("bad number '" + text + "' in --graph");
    }
    return v;
}

// "planted" draws a fresh instance per run; "planted:<seed>" and files are fixed.
GraphSpec load_graph(const std::string &spec, std::uint64_t run_seed) {
    if (spec == "planted") {
        auto p = planted_graph(mix_seed(run_seed, "planted", 0));
        return {p.graph, p.planted_edges, p.planted.size()};
    }
    if (spec.rfind("planted:", 0) == 0) {
        auto p = planted_graph(parse_seed(spec.substr(8)));
        return {p.graph, p.planted_edges, p.planted.size()};
    }
    if (spec.rfind("complete:", 0) == 0) {
        const std::size_t n = parse_seed(spec.substr(9));
        return {complete_graph(n), std::nullopt, 0};
    }
    if (!std::filesystem::is_regular_file(spec)) {
        throw IoError("cannot read graph file '" + spec + "'");
    }
    auto parsed = read_dimacs_file(spec);
    return {parsed.graph, std::nullopt, 0};
}

int run_densest(DensestOptions &o, Context &ctx) {
    if (o.runs == 0 || o.budget == 0 || o.k == 0) {
        throw std::invalid_argument("--runs, --budget and --k must be positive");
    }
    std::vector<std::string> strategies;
    if (o.strategy == "both") {
        strategies = {"gbs", "uniform"};
    } else {
        strategies = {o.strategy};
    }
    EncodingParams params = EncodingParams::mean_photons(o.mean_photons.value_or(static_cast<double>(o.k)));
    if (o.scale) {
        params = EncodingParams::scale(*o.scale);
    }
    const std::uint64_t max_draws = o.max_draws != 0 ? o.max_draws : 1000 * static_cast<std::uint64_t>(o.budget);

    Json config;
    config["command"] = "densest";
    config["version"] = TGBS_VERSION;
    config["graph"] = o.graph;
    config["k"] = o.k;
    config["strategy"] = o.strategy;
    config["loss_db"] = o.loss_db;
    config["budget"] = o.budget;
    config["seed"] = o.seed;
    config["runs"] = o.runs;
    config["encoding"] = o.scale ? Json{{"scale", *o.scale}} : Json{{"mean_photons", params.value}};
    config["max_draws"] = max_draws;
    config.update(o.common.to_json());

    Executor executor(o.common.resolved_workers(), o.common.chunk);
    RunOptions opts;
    opts.precision = parse_precision(o.common.precision);
    opts.executor = &executor;

    Output csv(o.trace_out, ctx.out);
    std::ostream &info = csv.is_file() ? ctx.out : ctx.err;
    write_config_line(csv.stream(), config);
    csv.stream() << "samples,best_edges,strategy,seed\n";

    for (const auto &strategy : strategies) {
        std::vector<SearchTrace> traces;
        std::size_t reached = 0;
        std::size_t with_target = 0;
        double acceptance = 0.0;
        for (std::size_t r = 0; r < o.runs; ++r) {
            const std::uint64_t run_seed = o.runs == 1 ? o.seed : mix_seed(o.seed, "densest-run", r);
            GraphSpec g = load_graph(o.graph, run_seed);
            if (o.k > g.graph.size()) {
                throw std::invalid_argument("--k exceeds the vertex count");
            }
            std::optional<std::size_t> target;
            if (g.planted_edges && o.k == g.planted_size) {
                target = g.planted_edges;
            }
            SearchTrace trace;
            if (strategy == "uniform") {
                UniformSubgraphSource src(g.graph.size(), o.k, run_seed);
                trace = random_search(src, g.graph, o.k, o.budget, run_seed);
            } else {
                GbsSubgraphSource src(g.graph, params, o.loss_db, o.k, run_seed, max_draws, opts);
                trace = random_search(src, g.graph, o.k, o.budget, run_seed);
                acceptance += src.stats().acceptance_fraction();
                if (trace.samples() < o.budget) {
                    info << "run " << r << ": only " << trace.samples() << " postselected samples in "
                         << src.stats().draws << " draws\n";
                }
            }
            if (target) {
                ++with_target;
                reached += trace.best_edges() >= *target ? 1 : 0;
            }
            traces.push_back(std::move(trace));
        }
        const auto mean = average_traces(traces, o.budget);
        for (std::size_t s = 0; s < mean.size(); ++s) {
            csv.stream() << s + 1 << ',' << fmt(mean[s]) << ',' << strategy << ',' << o.seed << '\n';
        }
        info << strategy << ": runs " << o.runs << ", mean best edges " << fmt(mean.back());
        if (with_target > 0) {
            info << ", reached target in " << reached << '/' << with_target;
        }
        if (strategy == "gbs") {
            info << ", mean acceptance " << fmt(acceptance / static_cast<double>(o.runs));
        }
        info << '\n';
    }
    csv.finish();
    return kExitOk;
}

}  // namespace

Subcommand register_densest(CLI::App &root) {
    auto opts = std::make_shared<DensestOptions>();
    CLI::App *app = root.add_subcommand("densest", "Random search for a densest k-subgraph, GBS vs uniform sampling");
    app->add_option("--graph", opts->graph,
                    "DIMACS .clq file, planted:<seed>, planted (fresh instance per run) or complete:<n>")
        ->capture_default_str();
    app->add_option("--k", opts->k, "Subgraph size (= postselected click count)")->capture_default_str();
    app->add_option("--strategy", opts->strategy, "gbs | uniform | both")
        ->capture_default_str()
        ->check(CLI::IsMember({"gbs", "uniform", "both"}));
    app->add_option("--loss-db", opts->loss_db, "Uniform loss, dB (3 dB: T = 0.5012)")->capture_default_str();
    app->add_option("--budget", opts->budget, "Samples per run")->capture_default_str();
    app->add_option("--seed", opts->seed, "Root seed")->capture_default_str();
    app->add_option("--runs", opts->runs, "Independent runs to average")->capture_default_str();
    auto *mp = app->add_option("--mean-photons", opts->mean_photons, "Encoding mean photon number (default --k)");
    app->add_option("--scale", opts->scale, "Encoding scale c < 1/lambda_max")->excludes(mp);
    app->add_option("--max-draws", opts->max_draws, "Draw cap per GBS run (default 1000 x --budget)");
    app->add_option("--trace-out", opts->trace_out, "Averaged trace CSV ('-' = stdout)")->capture_default_str();
    add_common_options(*app, opts->common, false);
    return {app, [opts](Context &ctx) { return run_densest(*opts, ctx); }};
}

}  // namespace tgbs::cli
