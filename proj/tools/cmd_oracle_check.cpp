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
#include <ostream>
#include <sstream>

#include "cli_common.hpp"
#include "tgbs/oracle.hpp"
#include "tgbs/precision.hpp"
#include "tgbs/rng.hpp"

namespace tgbs::cli {
namespace {

struct OracleOptions {
    std::size_t modes = 6;
    std::size_t trials = 20;
    std::uint64_t seed = 0;
    double max_db = 8.0;
    std::vector<double> loss_db{0.0, 1.2, 3.0, 6.0};
    bool vacuum = false;
    std::string out = "-";
    CommonOptions common;
};

GaussianState trial_state(const OracleOptions &o, std::size_t trial, double loss_db) {
    if (o.vacuum) {
        return vacuum_state(o.modes);
    }
    Rng rng = Rng::derive(o.seed, "oracle-trial", trial);
    std::vector<double> r(o.modes);
    for (double &x : r) {
        x = squeezing_from_db(o.max_db * rng.uniform());
    }
    GaussianState s = apply_interferometer(squeezed_vacuum(r), haar_unitary(o.modes, rng));
    return loss_db > 0.0 ? apply_uniform_loss(s, transmission_from_db(loss_db)) : s;
}

int run_oracle_check(OracleOptions &o, Context &ctx) {
    if (o.modes == 0 || o.modes > kEnumerationLimit) {
        throw std::invalid_argument("--modes must be in 1.." + std::to_string(kEnumerationLimit) +
                                    " (exhaustive enumeration limit)");
    }
    if (o.loss_db.empty()) {
        o.loss_db.push_back(0.0);
    }
    Json config;
    config["command"] = "oracle-check";
    config["version"] = TGBS_VERSION;
    config["modes"] = o.modes;
    config["trials"] = o.trials;
    config["seed"] = o.seed;
    config["max_db"] = o.max_db;
    config["loss_db"] = o.loss_db;
    config["vacuum"] = o.vacuum;
    config.update(o.common.to_json());

    Executor executor(o.common.resolved_workers(), o.common.chunk);
    RunOptions opts;
    opts.precision = parse_precision(o.common.precision);
    opts.executor = &executor;

    Output csv(o.out, ctx.out);
    std::ostream &info = csv.is_file() ? ctx.out : ctx.err;
    write_config_line(csv.stream(), config);
    csv.stream() << "trial,loss_db,pattern,chain_prob,ie_prob,rel_err,agree\n";

    std::size_t patterns = 0;
    std::size_t failures = 0;
    double worst_rel = 0.0;
    double worst_total = 0.0;
    for (std::size_t t = 0; t < o.trials; ++t) {
        const double loss = o.loss_db[t % o.loss_db.size()];
        GaussianState s = trial_state(o, t, loss);
        DistributionTable table = enumerate_distribution(s, opts);
        std::vector<double> ie(table.probabilities.size());
        executor.for_each_index(ie.size(), [&](std::size_t i) {
            ie[i] = inclusion_exclusion_prob(s, ClickPattern::from_index(i, o.modes));
        });
        for (std::size_t i = 0; i < ie.size(); ++i) {
            const double c = table.probabilities[i];
            const double scale = std::max(std::abs(c), std::abs(ie[i]));
            const double rel = scale > 0.0 ? std::abs(c - ie[i]) / scale : 0.0;
            const bool agree = probabilities_agree(c, ie[i]);
            worst_rel = std::max(worst_rel, std::abs(c - ie[i]) > 1e-12 ? rel : 0.0);
            failures += agree ? 0 : 1;
            ++patterns;
            csv.stream() << t << ',' << fmt(loss) << ',' << ClickPattern::from_index(i, o.modes).to_string() << ','
                         << fmt(c) << ',' << fmt(ie[i]) << ',' << fmt(rel) << ',' << (agree ? 1 : 0) << '\n';
        }
        const double total_err = std::abs(table.total() - 1.0);
        worst_total = std::max(worst_total, total_err);
        if (total_err > 1e-9) {
            ++failures;
        }
    }
    csv.finish();
    info << "oracle-check " << (failures == 0 ? "PASS" : "FAIL") << " trials=" << o.trials << " patterns=" << patterns
         << " disagreements=" << failures << " max_rel_err=" << fmt(worst_rel)
         << " max_norm_err=" << fmt(worst_total) << '\n';
    return failures == 0 ? kExitOk : kExitNumerical;
}

}  // namespace

Subcommand register_oracle_check(CLI::App &root) {
    auto opts = std::make_shared<OracleOptions>();
    CLI::App *app = root.add_subcommand(
        "oracle-check", "Compare every pattern probability of the sequential chain against inclusion-exclusion");
    app->add_option("--modes", opts->modes, "Number of modes (at most 10)")->capture_default_str();
    app->add_option("--trials", opts->trials, "Random instances")->capture_default_str();
    app->add_option("--seed", opts->seed, "Root seed")->capture_default_str();
    app->add_option("--max-db", opts->max_db, "Per-mode squeezing drawn uniformly in [0, max] dB")
        ->capture_default_str();
    app->add_option("--loss-db", opts->loss_db, "Loss levels in dB, cycled over trials")
        ->capture_default_str()
        ->delimiter(',');
    app->add_flag("--vacuum", opts->vacuum, "Use the vacuum state instead of random instances");
    app->add_option("--out", opts->out, "Per-pattern CSV ('-' = stdout)")->capture_default_str();
    add_common_options(*app, opts->common, false);
    return {app, [opts](Context &ctx) { return run_oracle_check(*opts, ctx); }};
}

}  // namespace tgbs::cli
