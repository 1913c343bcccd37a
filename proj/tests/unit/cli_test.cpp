// Copyright 2026 The HyPAQ Authors
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

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "test_util.hpp"

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = hypaq::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string temp_file(const std::string &name, const std::string &content) {
    auto path = std::filesystem::temp_directory_path() / ("hypaq_cli_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

std::string corpus(const char *name) { return hypaq::test_util::corpus_path(name); }

}  // namespace

TEST(cli, exit_codes) {
    EXPECT_EQ(run({"parse", corpus("conditional_gate.qc")}).code, 0);
    EXPECT_EQ(run({"parse", "/nonexistent/file.qc"}).code, 1);
    EXPECT_EQ(run({"partition", corpus("gate_chain.qc"), "-k", "1"}).code, 1);
    EXPECT_EQ(run({"partition", corpus("gate_chain.qc"), "-k", "4"}).code, 1);
    EXPECT_EQ(run({"hypergraph", corpus("conditional_gate.qc"), "--mode", "static"}).code, 1);
    EXPECT_EQ(run({"generate", "rus(n=2)"}).code, 1);
    EXPECT_EQ(run({"bogus"}).code, 1);
    auto r = run({"partition", corpus("gate_chain.qc"), "--heuristic", "sa"});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(cli, parse_json_and_text) {
    auto r = run({"parse", corpus("conditional_gate.qc")});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"ir_version\""), std::string::npos);
    auto json_path = temp_file("conditional_gate.json", r.out);
    auto back = run({"parse", json_path, "--format", "text"});
    ASSERT_EQ(back.code, 0) << back.err;
    EXPECT_EQ(back.out, hypaq::serialize_circuit(hypaq::test_util::corpus_circuit("conditional_gate.qc")));
}

TEST(cli, outputs_are_byte_identical) {
    for (const std::vector<std::string> &args :
         {std::vector<std::string>{"partition", corpus("retry_loop.qc"), "-k", "2", "--epsilon", "0.5"},
          std::vector<std::string>{"hypergraph", "rus(n=8)", "--format", "hmetis"},
          std::vector<std::string>{"compare", "random(n=6,depth=6,seed=4)"},
          std::vector<std::string>{"sweep", "--suite", "qpe", "--sizes", "2:4", "--jobs", "2"}}) {
        auto a = run(args);
        auto b = run(args);
        ASSERT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(cli, output_file_and_formats) {
    auto path = std::filesystem::temp_directory_path() / "hypaq_cli_test_out.csv";
    auto r = run({"hypergraph", corpus("gate_chain.qc"), "--format", "incidence", "-o", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), "vertex,e1,e2\nq0,1,0\nq1,1,1\nq2,0,1\n");
    auto csv = run({"partition", corpus("gate_chain.qc"), "--format", "csv"});
    ASSERT_EQ(csv.code, 0) << csv.err;
    EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 2);
    auto gen = run({"generate", "rus(n=4)"});
    ASSERT_EQ(gen.code, 0);
    EXPECT_NE(gen.out.find("while (flag[0]) {"), std::string::npos);
}

TEST(cli, config_layering) {
    auto cfg = temp_file("config.cfg", "k = 3\nepsilon = 0.5\np_default = 0.25\n");
    ::setenv("HYPAQ_CONFIG", cfg.c_str(), 1);
    auto from_env = run({"partition", "random(n=6)"});
    auto explicit_k = run({"partition", "random(n=6)", "-k", "2"});
    ::unsetenv("HYPAQ_CONFIG");
    ASSERT_EQ(from_env.code, 0) << from_env.err;
    ASSERT_EQ(explicit_k.code, 0) << explicit_k.err;
    EXPECT_NE(from_env.out.find("\"k\": 3"), std::string::npos);
    EXPECT_NE(explicit_k.out.find("\"k\": 2"), std::string::npos);
    auto bad = temp_file("bad.cfg", "k = three\n");
    ::setenv("HYPAQ_CONFIG", bad.c_str(), 1);
    EXPECT_EQ(run({"partition", corpus("gate_chain.qc")}).code, 1);
    ::unsetenv("HYPAQ_CONFIG");
    auto weights = temp_file("weights.cfg", "p_override.mid[0]==1 = 0.9\n");
    auto h = run({"hypergraph", corpus("conditional_gate.qc"), "--no-grouping", "--weights", weights});
    ASSERT_EQ(h.code, 0) << h.err;
    EXPECT_NE(h.out.find("\"probability\": 0.9"), std::string::npos);
}
