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
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

#include "cli_common.hpp"
#include "tgbs/click_pattern.hpp"
#include "tgbs/errors.hpp"
#include "tgbs/precision.hpp"
#include "tgbs/rng.hpp"
#include "tgbs/sampler.hpp"

namespace tgbs::cli {
namespace {

struct SampleOptions {
    std::size_t modes = 4;
    double squeezing_db = 8.0;
    double loss_db = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t draws = 1000;
    std::optional<std::size_t> clicks;
    std::uint64_t max_draws = 0;
    std::string forced;
    std::string order = "descending";
    std::string out = "-";
    std::string summary;
    CommonOptions common;
};

struct Row {
    std::uint64_t draw_index = 0;
    ClickPattern pattern;
    double joint_prob = 0.0;
    double wall_ms = 0.0;
    std::size_t peak = 1;
    bool failed = false;
};

std::vector<std::size_t> parse_order(const std::string &text, std::size_t modes) {
    if (text == "descending") {
        return descending_order(modes);
    }
    std::vector<std::size_t> order;
    if (text == "ascending") {
        for (std::size_t i = 0; i < modes; ++i) {
            order.push_back(i);
        }
        return order;
    }
    // Comma-separated 1-based mode labels.
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const unsigned long v = std::stoul(item, &pos);
        if (pos != item.size() || v == 0) {
            throw std::invalid_argument("--order expects 1-based mode labels, got '" + item + "'");
        }
        order.push_back(v - 1);
    }
    if (!is_permutation_of(order, modes)) {
        throw std::invalid_argument("--order is not a permutation of 1.." + std::to_string(modes));
    }
    return order;
}

double percentile(std::vector<double> v, double q) {
    if (v.empty()) {
        return 0.0;
    }
    std::sort(v.begin(), v.end());
    const double pos = q * static_cast<double>(v.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

// One unconstrained draw; a precision failure is retried once in double-double.
Row run_draw(const GaussianState &state, const MeasurementPlan &plan, std::uint64_t index, Precision precision) {
    Row row;
    row.draw_index = index;
    for (Precision p : {precision, Precision::kDoubleDouble}) {
        try {
            RunOptions opts;
            opts.precision = p;
            Rng rng = Rng::derive(plan.seed, "draw", index);
            SampleResult r = sample(state, plan, rng, opts);
            row.pattern = std::move(r.pattern);
            row.joint_prob = r.joint_prob;
            row.wall_ms = r.wall_ms;
            row.peak = r.peak_branch_count;
            row.failed = false;
            return row;
        } catch (const PrecisionError &) {
            row.failed = true;
        } catch (const NumericalDomainError &) {
            row.failed = true;
        }
    }
    return row;
}

int run_sample(SampleOptions &o, Context &ctx) {
    const Precision precision = parse_precision(o.common.precision);
    if (o.draws == 0) {
        throw std::invalid_argument("--draws must be positive");
    }
    GaussianState state = build_instance(o.modes, o.squeezing_db, o.loss_db, o.seed);
    MeasurementPlan plan;
    plan.order = parse_order(o.order, o.modes);
    plan.seed = o.seed;
    if (!o.forced.empty()) {
        plan.forced = ClickPattern::parse(o.forced);
        if (o.clicks) {
            throw std::invalid_argument("--forced and --clicks are mutually exclusive");
        }
    }
    if (o.clicks && *o.clicks > o.modes) {
        throw std::invalid_argument("--clicks exceeds --modes");
    }
    plan.validate(o.modes);
    const std::uint64_t max_draws = o.max_draws != 0 ? o.max_draws : o.draws * 1000;

    Json config;
    config["command"] = "sample";
    config["version"] = TGBS_VERSION;
    config["modes"] = o.modes;
    config["squeezing_db"] = o.squeezing_db;
    config["loss_db"] = o.loss_db;
    config["seed"] = o.seed;
    config["draws"] = o.draws;
    config["clicks"] = o.clicks ? Json(*o.clicks) : Json(nullptr);
    config["max_draws"] = o.clicks ? Json(max_draws) : Json(nullptr);
    config["forced"] = o.forced.empty() ? Json(nullptr) : Json(o.forced);
    config["order"] = o.order;
    config["no_timing"] = o.common.no_timing;
    config.update(o.common.to_json());

    Output csv(o.out, ctx.out);
    std::ostream &info = csv.is_file() ? ctx.out : ctx.err;
    write_config_line(csv.stream(), config);
    csv.stream() << "draw_index,pattern,n_clicks,joint_prob,wall_ms,peak_branch_count\n";

    std::vector<double> times;
    std::size_t peak = 1;
    std::uint64_t accepted = 0;
    std::uint64_t attempted = 0;
    std::uint64_t failures = 0;
    double click_sum = 0.0;
    auto emit = [&](const Row &row) {
        auto &s = csv.stream();
        s << row.draw_index << ',';
        if (row.failed) {
            s << "precision-error,NA,NA,";
        } else {
            s << row.pattern.to_string() << ',' << row.pattern.clicks() << ',' << fmt(row.joint_prob) << ',';
        }
        if (o.common.no_timing) {
            s << "NA";
        } else {
            s << fmt(row.wall_ms);
        }
        s << ',' << row.peak << '\n';
        if (!row.failed) {
            times.push_back(row.wall_ms);
            peak = std::max(peak, row.peak);
            click_sum += static_cast<double>(row.pattern.clicks());
        } else {
            ++failures;
        }
    };

    Executor executor(o.common.resolved_workers(), o.common.chunk);
    if (plan.forced) {
        RunOptions opts;
        opts.precision = precision;
        opts.executor = &executor;
        SampleResult r = sample(state, plan, opts);
        Row row{0, r.pattern, r.joint_prob, r.wall_ms, r.peak_branch_count, false};
        emit(row);
        accepted = attempted = 1;
        info << "joint_prob " << fmt(r.joint_prob) << '\n';
    } else if (o.clicks) {
        RunOptions opts;
        opts.precision = precision;
        opts.executor = &executor;
        PostselectedStream stream(state, plan, *o.clicks, max_draws, opts);
        while (accepted < o.draws) {
            auto a = stream.next();
            if (!a) {
                break;
            }
            emit(Row{a->draw_index, a->pattern, a->joint_prob, a->wall_ms, a->peak_branch_count, false});
            ++accepted;
        }
        attempted = stream.stats().draws;
        if (accepted == 0) {
            info << "no draw with " << *o.clicks << " clicks in " << attempted << " attempts\n";
        }
    } else {
        constexpr std::uint64_t kBatch = 4096;
        std::vector<Row> rows;
        for (std::uint64_t begin = 0; begin < o.draws; begin += kBatch) {
            const std::uint64_t n = std::min(kBatch, o.draws - begin);
            rows.assign(n, Row{});
            executor.for_each_index(n, [&](std::size_t i) { rows[i] = run_draw(state, plan, begin + i, precision); });
            for (const Row &row : rows) {
                emit(row);
            }
        }
        accepted = attempted = o.draws;
    }
    csv.finish();

    Json summary;
    summary["config"] = config;
    summary["draws_attempted"] = attempted;
    summary["samples"] = accepted;
    summary["acceptance_fraction"] = attempted == 0 ? 0.0 : static_cast<double>(accepted) / attempted;
    summary["mean_clicks"] = times.empty() ? 0.0 : click_sum / static_cast<double>(times.size());
    summary["peak_branch_count"] = peak;
    summary["precision_failures"] = failures;
    if (o.common.no_timing) {
        summary["wall_ms"] = nullptr;
    } else {
        summary["wall_ms"] = {{"p50", percentile(times, 0.5)},
                              {"p90", percentile(times, 0.9)},
                              {"p99", percentile(times, 0.99)},
                              {"max", times.empty() ? 0.0 : *std::max_element(times.begin(), times.end())}};
    }
    std::string summary_path = o.summary;
    if (summary_path.empty() && csv.is_file()) {
        summary_path = o.out + ".summary.json";
    }
    if (!summary_path.empty()) {
        Output js(summary_path, ctx.out);
        js.stream() << summary.dump(2) << '\n';
        js.finish();
    }
    info << "samples " << accepted << " of " << attempted << " draws, peak branches " << peak << '\n';
    return failures == 0 ? kExitOk : kExitNumerical;
}

}  // namespace

Subcommand register_sample(CLI::App &root) {
    auto opts = std::make_shared<SampleOptions>();
    CLI::App *app = root.add_subcommand("sample", "Draw exact threshold-detector samples from a random GBS instance");
    app->add_option("--modes", opts->modes, "Number of modes")->capture_default_str()->check(CLI::PositiveNumber);
    app->add_option("--squeezing-db", opts->squeezing_db, "Input squeezing per mode, dB (8 dB: r = 0.9210)")
        ->capture_default_str();
    app->add_option("--loss-db", opts->loss_db, "Uniform loss after the interferometer, dB")->capture_default_str();
    app->add_option("--seed", opts->seed, "Root seed (instance and draws)")->capture_default_str();
    app->add_option("--draws", opts->draws, "Samples to write (accepted samples with --clicks)")
        ->capture_default_str();
    app->add_option("--clicks", opts->clicks, "Postselect on this many clicks");
    app->add_option("--max-draws", opts->max_draws, "Draw cap under --clicks (default 1000 x --draws)");
    app->add_option("--forced", opts->forced, "Impose this outcome bitstring (mode 1 leftmost) and report its probability");
    app->add_option("--order", opts->order, "descending | ascending | comma list of 1-based modes")
        ->capture_default_str();
    app->add_option("--out", opts->out, "Sample CSV ('-' = stdout)")->capture_default_str();
    app->add_option("--summary", opts->summary, "JSON run summary (default <out>.summary.json)");
    add_common_options(*app, opts->common);
    return {app, [opts](Context &ctx) { return run_sample(*opts, ctx); }};
}

}  // namespace tgbs::cli
