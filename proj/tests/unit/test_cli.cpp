// Copyright 2026 The DDS Workbench Authors
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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "dds/io.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    std::string err;
    std::string out;
};

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / (std::string("dds_cli_") + info->name() + "_" + std::to_string(::getpid()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string &name, const std::string &text) {
        const auto p = dir_ / name;
        dds::write_file_atomic(p, text);
        return p;
    }

    Result run(const std::string &args) {
        const auto out = dir_ / "stdout.txt";
        const auto err = dir_ / "stderr.txt";
        const std::string cmd = std::string(DDS_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
        const int status = std::system(cmd.c_str());
        Result r;
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = dds::read_text_file(out);
        r.err = dds::read_text_file(err);
        return r;
    }

    fs::path dir_;
};

std::size_t line_count(const std::string &s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::vector<std::vector<std::string>> read_csv(const fs::path &p) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(dds::read_text_file(p));
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> row;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            row.push_back(cell);
        }
        rows.push_back(row);
    }
    return rows;
}

// Relative path -> bytes, skipping the run_meta.json sidecar.
std::map<std::string, std::string> snapshot(const fs::path &root) {
    std::map<std::string, std::string> files;
    for (const auto &e : fs::recursive_directory_iterator(root)) {
        if (e.is_regular_file() && e.path().filename() != "run_meta.json") {
            files[fs::relative(e.path(), root).string()] = dds::read_text_file(e.path());
        }
    }
    return files;
}

const char *kSk4 = R"({"problem": {"type": "qaoa", "layers": 1, "graph": {"model": "SK", "n_nodes": 4, "seed": 3}},
 "policies": ["fixed", "dds"], "seeds": [1, 2, 3], "optimizer": {"max_iterations": 60}})";

TEST_F(CliTest, TrainWritesOneLogPerPolicyAndSeed) {
    const auto cfg = write("sk4.json", kSk4);
    const auto out = dir_ / "out";
    const auto r = run("train --config " + cfg.string() + " --out " + out.string());
    ASSERT_EQ(r.code, 0) << r.err;
    std::size_t json_logs = 0;
    for (const auto &e : fs::directory_iterator(out / "logs")) {
        json_logs += e.path().extension() == ".json";
    }
    EXPECT_EQ(json_logs, 6u);
    const auto summary = read_csv(out / "summary.csv");
    ASSERT_EQ(summary.size(), 7u);
    EXPECT_EQ(summary[0], (std::vector<std::string>{"policy", "seed", "s_avg", "i_tot", "s_tot", "final_cost", "arg"}));
    // Summary S_tot equals the per-iteration column sum of the matching log.
    for (std::size_t i = 1; i < summary.size(); ++i) {
        const auto rows = read_csv(out / "logs" / (summary[i][0] + "_seed" + summary[i][1] + ".csv"));
        std::uint64_t sum = 0;
        for (std::size_t k = 1; k < rows.size(); ++k) {
            sum += std::stoull(rows[k][1]);
        }
        EXPECT_EQ(std::to_string(sum), summary[i][4]);
        EXPECT_EQ(std::to_string(rows.size() - 1), summary[i][3]);
    }
    EXPECT_TRUE(fs::exists(out / "comparison.csv"));
    EXPECT_TRUE(fs::exists(out / "run_meta.json"));
}

TEST_F(CliTest, TrainRerunIsByteIdenticalAcrossJobs) {
    const auto cfg = write("sk4.json", kSk4);
    ASSERT_EQ(run("train --config " + cfg.string() + " --out " + (dir_ / "a").string() + " --jobs 1").code, 0);
    ASSERT_EQ(run("train --config " + cfg.string() + " --out " + (dir_ / "b").string() + " --jobs 3").code, 0);
    const auto a = snapshot(dir_ / "a");
    EXPECT_GE(a.size(), 15u);
    EXPECT_EQ(a, snapshot(dir_ / "b"));
}

TEST_F(CliTest, FlagsOverrideConfig) {
    const auto cfg = write("sk4.json", kSk4);
    const auto out = dir_ / "o";
    ASSERT_EQ(run("train --config " + cfg.string() + " --out " + out.string() + " --policy dds --seed 7 --noise heron").code, 0);
    const auto summary = read_csv(out / "summary.csv");
    ASSERT_EQ(summary.size(), 2u);
    EXPECT_EQ(summary[1][0], "dds");
    EXPECT_EQ(summary[1][1], "7");
    const auto log = nlohmann::json::parse(dds::read_text_file(out / "logs" / "dds_seed7.json"));
    EXPECT_EQ(log["noise"]["label"], "heron");
}

TEST_F(CliTest, MissingHamiltonianFile) {
    const auto cfg = write("h.json", R"({"problem": {"type": "hamiltonian", "file": "nope.txt", "layers": 1},
        "policies": ["fixed"], "seeds": [1]})");
    const auto r = run("train --config " + cfg.string() + " --out " + (dir_ / "o").string());
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("file not found"), std::string::npos) << r.err;
}

TEST_F(CliTest, HamiltonianRunWithReferenceEnergy) {
    write("h.txt", "# two-qubit toy\n-1 ZI\n-1 IZ\n0.5 XX\n");
    const auto cfg = write("h.json", R"({"problem": {"type": "hamiltonian", "file": "h.txt", "layers": 1,
        "reference_energy": -2.0615528128088303}, "policies": ["fixed"], "seeds": [1],
        "optimizer": {"max_iterations": 40}})");
    const auto r = run("train --config " + cfg.string() + " --out " + (dir_ / "o").string());
    ASSERT_EQ(r.code, 0) << r.err;
    const auto summary = read_csv(dir_ / "o" / "summary.csv");
    ASSERT_EQ(summary.size(), 2u);
    EXPECT_FALSE(summary[1][6].empty());
}

TEST_F(CliTest, ValidationErrorsNameTheField) {
    const auto cfg = write("bad.json", R"({"problem": {"type": "qaoa", "layers": 1, "graph": {"model": "SK", "n_nodes": 4}},
        "policies": ["fixed"], "seeds": [1], "shots_per_iteration": 3})");
    const auto r = run("train --config " + cfg.string());
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("shots_per_iteration"), std::string::npos) << r.err;
    const auto cfg2 = write("bad2.json", R"({"problem": {"type": "qaoa", "layers": 0, "graph": {"model": "SK", "n_nodes": 4}},
        "policies": ["fixed"], "seeds": [1]})");
    EXPECT_EQ(run("train --config " + cfg2.string()).code, 1);
    EXPECT_EQ(run("train --config " + (dir_ / "absent.json").string()).code, 1);
    const auto junk = write("junk.json", "{not json");
    EXPECT_EQ(run("train --config " + junk.string()).code, 1);
    EXPECT_EQ(run("train --config " + write("sk.json", kSk4).string() + " --noise mystery").code, 1);
    EXPECT_EQ(run("no-such-command").code, 1);
    EXPECT_EQ(run("--help").code, 0);
}

TEST_F(CliTest, CalibrateUniformFamilyIsMonotone) {
    const auto cfg = write("cal.json", R"({"seeds": [3], "calibration": {"trials": 30,
        "family": [{"kind": "uniform", "n_qubits": 1}, {"kind": "uniform", "n_qubits": 2},
                   {"kind": "uniform", "n_qubits": 3}, {"kind": "uniform", "n_qubits": 4}],
        "hellinger_qubits": [2], "hellinger_shots": [100, 1000], "hellinger_trials": 11}})");
    const auto out = dir_ / "cal";
    const auto r = run("calibrate --config " + cfg.string() + " --out " + out.string());
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = read_csv(out / "calibration.csv");
    ASSERT_EQ(rows.size(), 5u);
    for (std::size_t i = 2; i < rows.size(); ++i) {
        EXPECT_GT(std::stoull(rows[i][1]), std::stoull(rows[i - 1][1]));
    }
    const auto fit = nlohmann::json::parse(dds::read_text_file(out / "calibration_fit.json"));
    EXPECT_TRUE(fit.contains("fit"));
    EXPECT_EQ(read_csv(out / "hellinger.csv").size(), 3u);
}

TEST_F(CliTest, CalibrateEmptyFamilyWritesNothing) {
    const auto cfg = write("cal.json", R"({"calibration": {"family": []}})");
    const auto out = dir_ / "cal";
    const auto r = run("calibrate --config " + cfg.string() + " --out " + out.string());
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(fs::exists(out / "calibration.csv"));
}

const char *kPl4 = R"({"problem": {"type": "qaoa", "layers": 1, "graph": {"model": "PL", "n_nodes": 4, "seed": 1}},
 "policies": ["dds_m"], "seeds": [1, 2, 3], "optimizer": {"max_iterations": 40}})";

TEST_F(CliTest, SweepKRowsPerK) {
    const auto cfg = write("pl4.json", kPl4);
    const auto out = dir_ / "sw";
    const auto r = run("sweep-k --config " + cfg.string() + " --out " + out.string());
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = read_csv(out / "sweep_k.csv");
    ASSERT_EQ(rows.size(), 8u);
    EXPECT_EQ(rows[1][0], "1");
    EXPECT_EQ(rows[7][0], "64");
    EXPECT_EQ(rows[1][1], "3");
}

TEST_F(CliTest, SweepKSingleValue) {
    std::string text = kPl4;
    text.insert(text.rfind('}'), R"(, "sweep_k": {"k_values": [4]})");
    const auto cfg = write("pl4.json", text);
    const auto r = run("sweep-k --config " + cfg.string() + " --out " + (dir_ / "sw").string());
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(read_csv(dir_ / "sw" / "sweep_k.csv").size(), 2u);
}

TEST_F(CliTest, CompareSelfAndMismatchedSeeds) {
    const auto cfg = write("sk4.json", kSk4);
    const auto out = dir_ / "t";
    ASSERT_EQ(run("train --config " + cfg.string() + " --out " + out.string()).code, 0);
    const auto self = run("compare " + (out / "logs" / "fixed_seed1.json").string() + " " +
                          (out / "logs" / "fixed_seed2.json").string() + " --out " + (dir_ / "c").string());
    ASSERT_EQ(self.code, 0) << self.err;
    const auto rows = read_csv(dir_ / "c" / "comparison.csv");
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[1][9], "0");
    EXPECT_EQ(rows[1][10], "0");

    const auto all = run("compare " + (out / "logs").string() + " --out " + (dir_ / "c2").string());
    ASSERT_EQ(all.code, 0) << all.err;
    EXPECT_EQ(read_csv(dir_ / "c2" / "comparison.csv").size(), 3u);

    const auto bad = run("compare " + (out / "logs" / "fixed_seed1.json").string() + " " +
                         (out / "logs" / "dds_seed2.json").string());
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("seed"), std::string::npos) << bad.err;
    EXPECT_EQ(run("compare " + (out / "logs" / "dds_seed2.json").string()).code, 1);
}

TEST_F(CliTest, GenGraphIsDeterministic) {
    const auto a = run("gen-graph --model BA --nodes 7 --seed 5 --out " + (dir_ / "g1").string());
    ASSERT_EQ(a.code, 0) << a.err;
    ASSERT_EQ(run("gen-graph --model BA --nodes 7 --seed 5 --out " + (dir_ / "g2").string()).code, 0);
    EXPECT_EQ(snapshot(dir_ / "g1"), snapshot(dir_ / "g2"));
    const auto j = nlohmann::json::parse(dds::read_text_file(dir_ / "g1" / "BA_n7_seed5.json"));
    EXPECT_EQ(j["n_nodes"], 7);
    EXPECT_EQ(j["model"], "BA");
    EXPECT_EQ(j["edges"].size(), 11u);
    EXPECT_EQ(run("gen-graph --model XY --nodes 7 --seed 5 --out " + (dir_ / "g3").string()).code, 1);
}

}  // namespace
