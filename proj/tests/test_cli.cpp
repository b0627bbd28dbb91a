// Copyright 2026 The noisim Authors
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

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string &args) {
    std::string cmd = std::string(NOISIM_CLI) + " " + args + " 2>/dev/null";
    Result r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return r;
    }
    std::array<char, 4096> buf{};
    while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) {
        r.out.append(buf.data(), n);
    }
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST(Cli, layout_and_circuit) {
    auto r = run("layout --level 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "Q1 Q2\nQ1 a1\nQ2 a1\n");
    r = run("circuit --algorithm bv");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("[t=0.05us] X a1\n", 0), 0u);
}

TEST(Cli, run_writes_csv) {
    auto r = run("run --algorithm ccnot --trials 20 --avg-fidelity 0.99 --t1 50");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\nccnot,p1,0.99,50,25,20,"), std::string::npos) << r.out;

    std::string path = ::testing::TempDir() + "noisim_cli_out.csv";
    r = run("sweep-fidelity --algorithm bv --fidelities 0.9,1 --trials 10 --out " + path);
    EXPECT_EQ(r.code, 0);
    std::ifstream in(path);
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        lines++;
    }
    EXPECT_EQ(lines, 4);
}

TEST(Cli, deterministic_across_workers) {
    auto a = run("sweep-combined --algorithm bv --points 2 --trials 50 --seed 9 --workers 1");
    auto b = run("sweep-combined --algorithm bv --points 2 --trials 50 --seed 9 --workers 4");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, inject_single) {
    auto r = run("inject --algorithm bv --moment 1 --qubit Q2 --outcome 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("moment,qubit,outcome,success,vacuous\n1,Q2,1,", 0), 0u) << r.out;
}

TEST(Cli, usage_errors_exit_one) {
    EXPECT_EQ(run("").code, 1);
    EXPECT_EQ(run("frobnicate").code, 1);
    EXPECT_EQ(run("run --algorithm shor").code, 1);
    EXPECT_EQ(run("run --avg-fidelity 1.5 --trials 1").code, 1);
    EXPECT_EQ(run("run --dist p3 --trials 1").code, 1);
    EXPECT_EQ(run("sweep-coherence --t1-values 10,abc").code, 1);
    EXPECT_EQ(run("inject --moment 9999 --qubit Q1").code, 1);
    EXPECT_EQ(run("inject --moment 1 --qubit z9").code, 1);
    EXPECT_EQ(run("run --gate-times /nonexistent/file --trials 1").code, 1);
    EXPECT_EQ(run("layout --level 0").code, 1);
}
