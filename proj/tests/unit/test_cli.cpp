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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"

#include "json.hpp"
#include "tgbs/gaussian_state.hpp"
#include "tgbs/rng.hpp"
#include "tgbs/sampler.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "tgbs");
    std::ostringstream out;
    std::ostringstream err;
    const int code = tgbs::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        out.push_back(line);
    }
    return out;
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("tgbs_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, help_and_missing_subcommand) {
    auto h = run({"--help"});
    EXPECT_EQ(h.code, 0);
    EXPECT_NE(h.out.find("sample"), std::string::npos);
    EXPECT_NE(h.out.find("hbar = 2"), std::string::npos);
    auto s = run({"sample", "--help"});
    EXPECT_EQ(s.code, 0);
    EXPECT_NE(s.out.find("--no-timing"), std::string::npos);
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
}

TEST_F(CliTest, sample_writes_rows_and_summary) {
    const auto csv = path("s.csv");
    auto r = run({"sample", "--modes", "4", "--seed", "1", "--draws", "1000", "--out", csv, "--workers", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto ls = lines(slurp(csv));
    ASSERT_EQ(ls.size(), 1002u);
    EXPECT_EQ(ls[0].rfind("# config: {", 0), 0u);
    auto cfg = nlohmann::json::parse(ls[0].substr(10));
    EXPECT_EQ(cfg["modes"], 4);
    EXPECT_EQ(cfg["version"], TGBS_VERSION);
    EXPECT_EQ(ls[1], "draw_index,pattern,n_clicks,joint_prob,wall_ms,peak_branch_count");
    EXPECT_EQ(ls[2].rfind("0,", 0), 0u);
    auto summary = nlohmann::json::parse(slurp(csv + ".summary.json"));
    EXPECT_EQ(summary["samples"], 1000);
    EXPECT_TRUE(summary["wall_ms"].is_object());
}

TEST_F(CliTest, sample_deterministic_across_runs) {
    const auto a = path("a.csv");
    const auto b = path("b.csv");
    std::vector<std::string> args{"sample", "--modes", "5", "--seed", "9", "--draws", "300", "--no-timing",
                                  "--workers", "2", "--chunk", "8"};
    auto args_a = args;
    args_a.insert(args_a.end(), {"--out", a});
    auto args_b = args;
    args_b.insert(args_b.end(), {"--out", b});
    ASSERT_EQ(run(args_a).code, 0);
    ASSERT_EQ(run(args_b).code, 0);
    EXPECT_EQ(slurp(a), slurp(b));
}

TEST_F(CliTest, sample_rows_match_library_draws) {
    auto r = run({"sample", "--modes", "3", "--seed", "4", "--draws", "20", "--no-timing", "--out", "-"});
    ASSERT_EQ(r.code, 0);
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 22u);
    std::vector<double> rr(3, tgbs::squeezing_from_db(8.0));
    tgbs::Rng inst = tgbs::Rng::derive(4, "instance", 0);
    auto state = tgbs::apply_interferometer(tgbs::squeezed_vacuum(rr), tgbs::haar_unitary(3, inst));
    for (std::uint64_t i = 0; i < 20; ++i) {
        tgbs::Rng rng = tgbs::Rng::derive(4, "draw", i);
        auto s = tgbs::sample(state, tgbs::MeasurementPlan::descending(3, 4), rng);
        EXPECT_EQ(ls[2 + i].substr(0, ls[2 + i].find(',', ls[2 + i].find(',') + 1)),
                  std::to_string(i) + "," + s.pattern.to_string());
    }
}

TEST_F(CliTest, sample_forced_prints_pattern_probability) {
    const auto csv = path("f.csv");
    auto r = run({"sample", "--modes", "12", "--forced", "000000001111", "--seed", "2", "--out", csv});
    ASSERT_EQ(r.code, 0) << r.err;
    std::vector<double> rr(12, tgbs::squeezing_from_db(8.0));
    tgbs::Rng inst = tgbs::Rng::derive(2, "instance", 0);
    auto state = tgbs::apply_interferometer(tgbs::squeezed_vacuum(rr), tgbs::haar_unitary(12, inst));
    const double p = tgbs::pattern_probability(state, tgbs::ClickPattern::parse("000000001111")).value;
    std::istringstream in(r.out);
    std::string key;
    double printed = 0.0;
    in >> key >> printed;
    EXPECT_EQ(key, "joint_prob");
    EXPECT_DOUBLE_EQ(printed, p);
}

TEST_F(CliTest, sample_postselected) {
    auto r = run({"sample", "--modes", "6", "--clicks", "2", "--draws", "30", "--seed", "3", "--no-timing",
                  "--out", "-"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 32u);
    for (std::size_t i = 2; i < ls.size(); ++i) {
        EXPECT_NE(ls[i].find(",2,"), std::string::npos) << ls[i];
    }
}

TEST_F(CliTest, sample_validation_errors) {
    EXPECT_EQ(run({"sample", "--modes", "0"}).code, 1);
    EXPECT_EQ(run({"sample", "--modes", "3", "--forced", "01"}).code, 1);
    EXPECT_EQ(run({"sample", "--modes", "3", "--order", "1,2,2"}).code, 1);
    EXPECT_EQ(run({"sample", "--modes", "3", "--precision", "quad"}).code, 1);
    EXPECT_EQ(run({"sample", "--modes", "3", "--loss-db", "-1"}).code, 1);
    EXPECT_EQ(run({"sample", "--modes", "3", "--out", "/nonexistent/dir/x.csv"}).code, 3);
}

TEST_F(CliTest, oracle_check) {
    const auto csv = path("o.csv");
    auto r = run({"oracle-check", "--modes", "6", "--trials", "20", "--out", csv});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("oracle-check PASS"), std::string::npos);
    EXPECT_EQ(lines(slurp(csv)).size(), 2u + 20u * 64u);
    EXPECT_EQ(run({"oracle-check", "--modes", "11"}).code, 1);
    auto v = run({"oracle-check", "--modes", "3", "--vacuum", "--trials", "1", "--out", "-"});
    EXPECT_EQ(v.code, 0);
    auto ls = lines(v.out);
    ASSERT_EQ(ls.size(), 10u);
    EXPECT_EQ(ls[2].rfind("0,0,000,1,", 0), 0u);
    EXPECT_EQ(ls[2].back(), '1');
    for (std::size_t i = 3; i < ls.size(); ++i) {
        EXPECT_EQ(ls[i].substr(8, 2), "0,") << ls[i];
        EXPECT_EQ(ls[i].back(), '1') << ls[i];
    }
}

TEST_F(CliTest, estimate) {
    auto r = run({"estimate", "--modes", "800", "--clicks", "20"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("peak_gb 76050\n"), std::string::npos);
    EXPECT_NE(r.out.find("nodes_min 2377\n"), std::string::npos);
    EXPECT_NE(r.out.find("nodes_pow2 4096\n"), std::string::npos);
    EXPECT_NE(r.out.find("reference_titan nodes 8192"), std::string::npos);
    auto small = run({"estimate", "--modes", "50", "--clicks", "5"});
    EXPECT_NE(small.out.find("peak_gb 0.0077247619628906"), std::string::npos);
    EXPECT_NE(small.out.find("nodes_min 1\n"), std::string::npos);
    const auto csv = path("e.csv");
    auto zero = run({"estimate", "--modes", "10", "--clicks", "0", "--csv", csv});
    ASSERT_EQ(zero.code, 0);
    auto ls = lines(slurp(csv));
    ASSERT_EQ(ls.size(), 13u);
    EXPECT_EQ(ls[1], "step,clicks,memory_gb,nodes_min,nodes_pow2");
    EXPECT_EQ(ls[2].rfind("0,0,", 0), 0u);
    EXPECT_EQ(run({"estimate", "--modes", "5", "--clicks", "6"}).code, 1);
    EXPECT_EQ(run({"estimate", "--eta", "0"}).code, 1);
}

TEST_F(CliTest, densest_uniform_complete_graph) {
    auto r = run({"densest", "--graph", "complete:10", "--k", "3", "--strategy", "uniform", "--budget", "5",
                  "--trace-out", "-"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 7u);
    EXPECT_EQ(ls[1], "samples,best_edges,strategy,seed");
    EXPECT_EQ(ls[2], "1,3,uniform,0");
}

TEST_F(CliTest, densest_deterministic_and_file_input) {
    const auto g = path("g.clq");
    {
        std::ofstream f(g);
        f << "c test\np edge 6 7\ne 1 2\ne 1 3\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 4 6\n";
    }
    const auto a = path("a.csv");
    const auto b = path("b.csv");
    for (const auto &out : {a, b}) {
        auto r = run({"densest", "--graph", g, "--k", "3", "--strategy", "both", "--budget", "20", "--runs", "3",
                      "--seed", "5", "--workers", "2", "--trace-out", out});
        ASSERT_EQ(r.code, 0) << r.err;
    }
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_EQ(lines(slurp(a)).size(), 2u + 40u);
    EXPECT_EQ(run({"densest", "--graph", path("missing.clq")}).code, 3);
    const auto bad = path("bad.clq");
    {
        std::ofstream f(bad);
        f << "p edge 3 1\ne 1 9\n";
    }
    auto e = run({"densest", "--graph", bad, "--k", "2"});
    EXPECT_EQ(e.code, 1);
    EXPECT_NE(e.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, bench) {
    auto r = run({"bench", "--modes", "8", "--clicks-min", "1", "--clicks-max", "3", "--reps", "2",
                  "--placement", "first", "--no-timing", "--out", "-"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 8u);
    EXPECT_EQ(ls[1], "clicks,rep,pattern,joint_prob,wall_ms,peak_branch_count");
    EXPECT_EQ(ls[2].substr(0, 13), "1,0,00000001,");
    EXPECT_EQ(ls.back().substr(ls.back().size() - 5), ",NA,8");
}

TEST_F(CliTest, binary_exit_codes) {
    const std::string exe = TGBS_CLI_PATH;
    EXPECT_EQ(WEXITSTATUS(std::system((exe + " estimate --modes 50 --clicks 5 > /dev/null").c_str())), 0);
    EXPECT_EQ(WEXITSTATUS(std::system((exe + " oracle-check --modes 11 2> /dev/null").c_str())), 1);
    EXPECT_EQ(WEXITSTATUS(std::system((exe + " densest --graph /nonexistent.clq 2> /dev/null").c_str())), 3);
}
