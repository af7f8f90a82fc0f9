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
#include <numeric>
#include <ostream>
#include <random>

#include "cli_common.hpp"
#include "tgbs/errors.hpp"
#include "tgbs/precision.hpp"
#include "tgbs/rng.hpp"
#include "tgbs/sampler.hpp"

namespace tgbs::cli {
namespace {

struct BenchOptions {
    std::size_t modes = 12;
    std::size_t clicks_min = 1;
    std::size_t clicks_max = 6;
    std::size_t reps = 5;
    std::uint64_t seed = 0;
    double squeezing_db = 8.0;
    std::string placement = "random";
    std::string out = "-";
    CommonOptions common;
};

// Click positions follow the descending measurement order: "first" clicks the
// highest-numbered modes, which are measured first.
ClickPattern bench_pattern(const BenchOptions &o, std::size_t clicks, std::size_t rep) {
    ClickPattern p;
    p.bits.assign(o.modes, 0);
    if (o.placement == "first") {
        std::fill(p.bits.end() - static_cast<std::ptrdiff_t>(clicks), p.bits.end(), 1);
    } else if (o.placement == "last") {
        std::fill(p.bits.begin(), p.bits.begin() + static_cast<std::ptrdiff_t>(clicks), 1);
    } else {
        Rng rng = Rng::derive(o.seed, "bench-pattern", clicks * 1000003 + rep);
        std::vector<std::size_t> idx(o.modes);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::shuffle(idx.begin(), idx.end(), rng.engine());
        for (std::size_t i = 0; i < clicks; ++i) {
            p.bits[idx[i]] = 1;
        }
    }
    return p;
}

int run_bench(BenchOptions &o, Context &ctx) {
    if (o.clicks_min > o.clicks_max || o.clicks_max > o.modes) {
        throw std::invalid_argument("need --clicks-min <= --clicks-max <= --modes");
    }
    GaussianState state = build_instance(o.modes, o.squeezing_db, 0.0, o.seed);
    Json config;
    config["command"] = "bench";
    config["version"] = TGBS_VERSION;
    config["modes"] = o.modes;
    config["clicks_min"] = o.clicks_min;
    config["clicks_max"] = o.clicks_max;
    config["reps"] = o.reps;
    config["seed"] = o.seed;
    config["squeezing_db"] = o.squeezing_db;
    config["placement"] = o.placement;
    config["no_timing"] = o.common.no_timing;
    config.update(o.common.to_json());

    Executor executor(o.common.resolved_workers(), o.common.chunk);
    RunOptions opts;
    opts.precision = parse_precision(o.common.precision);
    opts.executor = &executor;

    Output csv(o.out, ctx.out);
    std::ostream &info = csv.is_file() ? ctx.out : ctx.err;
    write_config_line(csv.stream(), config);
    csv.stream() << "clicks,rep,pattern,joint_prob,wall_ms,peak_branch_count\n";
    for (std::size_t m = o.clicks_min; m <= o.clicks_max; ++m) {
        double total_ms = 0.0;
        for (std::size_t rep = 0; rep < o.reps; ++rep) {
            MeasurementPlan plan = MeasurementPlan::descending(o.modes, o.seed);
            plan.forced = bench_pattern(o, m, rep);
            SampleResult r;
            try {
                r = sample(state, plan, opts);
            } catch (const ImpossibleOutcomeError &) {
                r.pattern = *plan.forced;
                r.joint_prob = 0.0;
            }
            total_ms += r.wall_ms;
            csv.stream() << m << ',' << rep << ',' << plan.forced->to_string() << ',' << fmt(r.joint_prob) << ','
                         << (o.common.no_timing ? std::string("NA") : fmt(r.wall_ms)) << ',' << r.peak_branch_count
                         << '\n';
        }
        if (!o.common.no_timing) {
            info << "clicks " << m << ": mean " << fmt(total_ms / static_cast<double>(std::max<std::size_t>(1, o.reps)))
                 << " ms\n";
        }
    }
    csv.finish();
    return kExitOk;
}

}  // namespace

Subcommand register_bench(CLI::App &root) {
    auto opts = std::make_shared<BenchOptions>();
    CLI::App *app = root.add_subcommand("bench", "Forced-outcome timing sweep over the click count");
    app->add_option("--modes", opts->modes, "Number of modes")->capture_default_str()->check(CLI::PositiveNumber);
    app->add_option("--clicks-min", opts->clicks_min, "Smallest click count")->capture_default_str();
    app->add_option("--clicks-max", opts->clicks_max, "Largest click count")->capture_default_str();
    app->add_option("--reps", opts->reps, "Patterns per click count")->capture_default_str();
    app->add_option("--seed", opts->seed, "Root seed")->capture_default_str();
    app->add_option("--squeezing-db", opts->squeezing_db, "Input squeezing per mode, dB")->capture_default_str();
    app->add_option("--placement", opts->placement, "random | first | last (relative to measurement order)")
        ->capture_default_str()
        ->check(CLI::IsMember({"random", "first", "last"}));
    app->add_option("--out", opts->out, "Timing CSV ('-' = stdout)")->capture_default_str();
    add_common_options(*app, opts->common);
    return {app, [opts](Context &ctx) { return run_bench(*opts, ctx); }};
}

}  // namespace tgbs::cli
