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

#include "cli_common.hpp"

#include <cstdio>
#include <ostream>

#include "tgbs/precision.hpp"
#include "tgbs/rng.hpp"

namespace tgbs::cli {

std::size_t CommonOptions::resolved_workers() const { return workers == 0 ? hardware_workers() : workers; }

Json CommonOptions::to_json() const {
    Json j;
    j["workers"] = resolved_workers();
    j["chunk"] = chunk;
    j["precision"] = precision;
    return j;
}

void add_common_options(CLI::App &app, CommonOptions &opts, bool with_timing) {
    app.add_option("--workers", opts.workers, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--chunk", opts.chunk, "Branches per reduction chunk; fixes the summation order")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--precision", opts.precision, "Probability accumulation: compensated | double-double")
        ->capture_default_str()
        ->check(CLI::IsMember({"compensated", "double-double", "dd"}));
    if (with_timing) {
        app.add_flag("--no-timing", opts.no_timing, "Write NA instead of wall-clock times (bit-reproducible output)");
    }
}

Output::Output(const std::string &path, std::ostream &fallback) : path_(path), stream_(&fallback) {
    if (!path.empty() && path != "-") {
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
        if (!*file_) {
            throw IoError("cannot open '" + path + "' for writing");
        }
        stream_ = file_.get();
    }
}

void Output::finish() {
    stream_->flush();
    if (!*stream_) {
        throw IoError("write to '" + (path_.empty() ? std::string("-") : path_) + "' failed");
    }
}

void write_config_line(std::ostream &out, const Json &config) { out << "# config: " << config.dump() << '\n'; }

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

GaussianState build_instance(std::size_t modes, double squeezing_db, double loss_db, std::uint64_t seed) {
    if (modes == 0) {
        throw std::invalid_argument("--modes must be positive");
    }
    if (squeezing_db < 0.0) {
        throw std::invalid_argument("--squeezing-db must be non-negative");
    }
    std::vector<double> r(modes, squeezing_from_db(squeezing_db));
    Rng rng = Rng::derive(seed, "instance", 0);
    GaussianState s = apply_interferometer(squeezed_vacuum(r), haar_unitary(modes, rng));
    if (loss_db > 0.0) {
        s = apply_uniform_loss(s, transmission_from_db(loss_db));
    } else if (loss_db < 0.0) {
        throw std::invalid_argument("--loss-db must be non-negative");
    }
    return s;
}

}  // namespace tgbs::cli
