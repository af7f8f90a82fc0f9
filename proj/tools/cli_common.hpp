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

#include <cstdint>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli.hpp"
#include "json.hpp"
#include "tgbs/executor.hpp"
#include "tgbs/gaussian_state.hpp"
#include "tgbs/mixture.hpp"

namespace tgbs::cli {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Flags shared by the compute subcommands.
struct CommonOptions {
    std::size_t workers = 0;
    std::size_t chunk = 64;
    std::string precision = "compensated";
    bool no_timing = false;

    std::size_t resolved_workers() const;
    Json to_json() const;
};

void add_common_options(CLI::App &app, CommonOptions &opts, bool with_timing = true);

/// Output stream for `path`; "-" is `fallback`.
class Output {
  public:
    Output(const std::string &path, std::ostream &fallback);
    std::ostream &stream() { return *stream_; }
    bool is_file() const { return file_ != nullptr; }
    void finish();

  private:
    std::string path_;
    std::unique_ptr<std::ofstream> file_;
    std::ostream *stream_;
};

/// "# config: {...}" provenance line written first in every CSV.
void write_config_line(std::ostream &out, const Json &config);

/// Shortest round-trip decimal representation.
std::string fmt(double x);

/// 8 dB (or `squeezing_db`) squeezed vacuum on every mode, a Haar interferometer
/// drawn from stream ("instance", 0) of `seed`, then uniform loss.
GaussianState build_instance(std::size_t modes, double squeezing_db, double loss_db, std::uint64_t seed);

struct Context {
    std::ostream &out;
    std::ostream &err;
};

struct Subcommand {
    CLI::App *app = nullptr;
    std::function<int(Context &)> run;
};

Subcommand register_sample(CLI::App &root);
Subcommand register_oracle_check(CLI::App &root);
Subcommand register_estimate(CLI::App &root);
Subcommand register_densest(CLI::App &root);
Subcommand register_bench(CLI::App &root);

}  // namespace tgbs::cli
