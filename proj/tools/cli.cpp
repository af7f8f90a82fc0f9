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

#include "cli.hpp"

#include <ostream>

#include "cli_common.hpp"
#include "tgbs/errors.hpp"

namespace tgbs::cli {

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact Gaussian boson sampling with threshold detectors", "tgbs"};
    app.set_version_flag("--version", std::string(TGBS_VERSION));
    app.require_subcommand(1);
    app.footer(
        "Conventions: hbar = 2 (vacuum covariance = I); squeezing in dB of quadrature-variance reduction, "
        "r = dB ln(10)/20; loss in dB of power, T = 10^(-dB/10).\n"
        "Exit codes: 0 ok, 1 invalid input, 2 numerical failure, 3 I/O error.");

    std::vector<Subcommand> subs{register_sample(app), register_oracle_check(app), register_estimate(app),
                                 register_densest(app), register_bench(app)};

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();
    }
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForVersion &e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitValidation;
    }

    Context ctx{out, err};
    for (auto &sub : subs) {
        if (!sub.app->parsed()) {
            continue;
        }
        try {
            return sub.run(ctx);
        } catch (const IoError &e) {
            err << "error: " << e.what() << '\n';
            return kExitIo;
        } catch (const PrecisionError &e) {
            err << "numerical error: " << e.what() << '\n';
            return kExitNumerical;
        } catch (const NumericalDomainError &e) {
            err << "numerical error: " << e.what() << '\n';
            return kExitNumerical;
        } catch (const ImpossibleOutcomeError &e) {
            err << "numerical error: " << e.what() << '\n';
            return kExitNumerical;
        } catch (const ParseError &e) {
            err << "parse error: " << e.what() << '\n';
            return kExitValidation;
        } catch (const std::exception &e) {
            err << "error: " << e.what() << '\n';
            return kExitValidation;
        }
    }
    return kExitValidation;
}

}  // namespace tgbs::cli
