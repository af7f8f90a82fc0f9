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

#include <algorithm>
#include <ostream>

#include "cli_common.hpp"
#include "tgbs/resources.hpp"

namespace tgbs::cli {
namespace {

struct EstimateOptions {
    std::size_t modes = 800;
    std::size_t clicks = 20;
    ResourceModel model;
    std::string csv;
};

int run_estimate(EstimateOptions &o, Context &ctx) {
    o.model.validate();
    if (o.clicks > o.modes) {
        throw std::invalid_argument("--clicks exceeds --modes");
    }
    Json config;
    config["command"] = "estimate";
    config["version"] = TGBS_VERSION;
    config["modes"] = o.modes;
    config["clicks"] = o.clicks;
    config["eta"] = o.model.eta;
    config["bytes_per_scalar"] = o.model.bytes_per_scalar;
    config["node_gb"] = o.model.node_memory_gb;
    config["node_cores"] = o.model.node_cores;

    const double peak = peak_memory_worst_case(o.model, o.modes, o.clicks);
    const NodeCount nodes = node_count(o.model, peak);
    auto &out = ctx.out;
    out << "modes " << o.modes << ", clicks " << o.clicks << " (all clicks first)\n";
    out << "peak_gb " << fmt(peak) << '\n';
    out << "nodes_min " << nodes.minimum << '\n';
    out << "nodes_pow2 " << nodes.power_of_two << '\n';
    out << "cores_min " << nodes.minimum * o.model.node_cores << '\n';
    for (const auto &ref : kTitanWorstCase) {
        if (ref.modes == o.modes && ref.clicks == o.clicks) {
            out << "reference_titan nodes " << ref.nodes << ", cpu_hours " << fmt(ref.cpu_hours) << ", walltime_h "
                << fmt(ref.walltime_hours) << '\n';
        }
    }
    if (o.csv.empty()) {
        return kExitOk;
    }
    Output csv(o.csv, ctx.out);
    write_config_line(csv.stream(), config);
    csv.stream() << "step,clicks,memory_gb,nodes_min,nodes_pow2\n";
    for (std::size_t k = 0; k <= o.modes; ++k) {
        const std::size_t m = std::min(k, o.clicks);
        const double gb = memory_at_step(o.model, o.modes, m, k);
        const NodeCount n = node_count(o.model, gb);
        csv.stream() << k << ',' << m << ',' << fmt(gb) << ',' << n.minimum << ',' << n.power_of_two << '\n';
    }
    csv.finish();
    return kExitOk;
}

}  // namespace

Subcommand register_estimate(CLI::App &root) {
    auto opts = std::make_shared<EstimateOptions>();
    CLI::App *app = root.add_subcommand("estimate", "Memory and node-count model for the worst-case click placement");
    app->add_option("--modes", opts->modes, "Number of modes")->capture_default_str();
    app->add_option("--clicks", opts->clicks, "Number of clicks")->capture_default_str();
    app->add_option("--eta", opts->model.eta, "Overhead factor for temporaries")->capture_default_str();
    app->add_option("--bytes-per-scalar", opts->model.bytes_per_scalar, "Bytes per real scalar (16 = quad)")
        ->capture_default_str();
    app->add_option("--node-gb", opts->model.node_memory_gb, "Memory per node, GB")->capture_default_str();
    app->add_option("--node-cores", opts->model.node_cores, "Cores per node")->capture_default_str();
    app->add_option("--csv", opts->csv, "Per-step CSV along the clicks-first trajectory ('-' = stdout)");
    return {app, [opts](Context &ctx) { return run_estimate(*opts, ctx); }};
}

}  // namespace tgbs::cli
