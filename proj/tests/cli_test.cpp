// Copyright 2026 The eulb Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "eulb/sweep.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "eulb");
    std::ostringstream out, err;
    const int code = eulb::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("eulb_cli_test_" + name);
}

std::string write_file(const std::string &name, const std::string &text) {
    const auto path = scratch(name);
    std::ofstream(path) << text;
    return path.string();
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Cli, help) {
    const Result r = run({"--help"});
    EXPECT_EQ(r.code, eulb::cli::kExitOk);
    EXPECT_NE(r.out.find("sweep"), std::string::npos);
    EXPECT_NE(r.out.find("oracle"), std::string::npos);
    EXPECT_NE(r.out.find("audit"), std::string::npos);
    EXPECT_EQ(run({"sweep", "--help"}).code, eulb::cli::kExitOk);
}

TEST(Cli, sweep_figure_to_stdout) {
    const Result r = run({"sweep", "--fig", "3", "--out", "-"});
    ASSERT_EQ(r.code, eulb::cli::kExitOk) << r.err;
    EXPECT_EQ(r.out.rfind("# eulb sweep ", 0), 0u);
    EXPECT_NE(r.out.find(eulb::kCsvHeader), std::string::npos);
}

TEST(Cli, sweep_config_to_file) {
    const std::string cfg = write_file("sweep.cfg", "state: bell_diagonal\nn_qubits_list: 2\nsteps: 5\n");
    const auto out = scratch("sweep.csv");
    const Result r = run({"sweep", "--config", cfg, "--out", out.string()});
    ASSERT_EQ(r.code, eulb::cli::kExitOk) << r.err;
    std::ostringstream expected;
    eulb::emit_csv(eulb::run_sweep(eulb::load_config(cfg)), expected);
    EXPECT_EQ(read_file(out), expected.str());
    std::filesystem::remove(out);
}

TEST(Cli, sweep_validation_failures) {
    EXPECT_EQ(run({"sweep", "--fig", "1", "--out", "-"}).code, eulb::cli::kExitValidation);
    EXPECT_EQ(run({"sweep", "--fig", "2"}).code, eulb::cli::kExitValidation);
    EXPECT_EQ(run({"sweep", "--out", "-"}).code, eulb::cli::kExitValidation);
    const std::string cfg = write_file("bad.cfg", "p: 1.5\n");
    const Result bad = run({"sweep", "--config", cfg, "--out", "-"});
    EXPECT_EQ(bad.code, eulb::cli::kExitValidation);
    EXPECT_NE(bad.err.find("p"), std::string::npos);
    EXPECT_EQ(run({"sweep", "--fig", "2", "--config", cfg, "--out", "-"}).code, eulb::cli::kExitValidation);
    EXPECT_EQ(run({"sweep", "--config", "/nonexistent/x.cfg", "--out", "-"}).code, eulb::cli::kExitValidation);
    EXPECT_EQ(run({"sweep", "--fig", "2", "--out", "/nonexistent/x.csv"}).code, eulb::cli::kExitValidation);
    EXPECT_EQ(run({}).code, eulb::cli::kExitValidation);
}

TEST(Cli, oracle_pass_and_tolerance_failure) {
    const std::string cfg = write_file("oracle.cfg", "lambda_over_gamma0: 2\nn_qubits_list: 1\nt_max_gamma0: 2\nsteps: 21\n");
    const Result ok = run({"oracle", "--config", cfg});
    EXPECT_EQ(ok.code, eulb::cli::kExitOk) << ok.err;
    EXPECT_NE(ok.out.find("PASS"), std::string::npos);
    const Result coarse = run({"oracle", "--config", cfg, "--discrete-modes", "10", "--window", "1"});
    EXPECT_EQ(coarse.code, eulb::cli::kExitTolerance);
    EXPECT_NE(coarse.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(run({"oracle", "--config", cfg, "--discrete-modes", "0"}).code, eulb::cli::kExitValidation);
    EXPECT_EQ(run({"oracle"}).code, eulb::cli::kExitValidation);
}

TEST(Cli, audit) {
    const Result r = run({"audit", "--p", "0.5"});
    EXPECT_EQ(r.code, eulb::cli::kExitOk);
    EXPECT_NE(r.out.find("bell_diagonal.evolved_matrix"), std::string::npos);
    EXPECT_EQ(run({"audit"}).code, eulb::cli::kExitOk);
    EXPECT_EQ(run({"audit", "--p", "2"}).code, eulb::cli::kExitValidation);
    EXPECT_EQ(run({"audit", "--p", "abc"}).code, eulb::cli::kExitValidation);
}
