/*
 * Copyright 2026 The qcompare Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


// Runs the command-line tool as a subprocess.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef QCOMPARE_CLI_PATH
#error "QCOMPARE_CLI_PATH must name the qcompare executable"
#endif

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Invocation {
  int exit_code = -1;
  std::string out;
};

Invocation run(const std::string& args, bool discard_stderr = true,
               const std::string& env = "") {
  const std::string cmd = env + std::string(QCOMPARE_CLI_PATH) + " " + args +
                          (discard_stderr ? " 2>/dev/null" : " 2>&1");
  Invocation r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = fs::temp_directory_path() / ("qcompare_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
    write("pair.json", R"({"dim": 2, "states": [[[1, 0], [0, 0]], [[0.6, 0], [0.8, 0]]]})");
    write("orth.json", R"({"dim": 2, "states": [[[1, 0], [0, 0]], [[0, 0], [1, 0]]]})");
    write("g1.json", R"({"gram": [[[1, 0], [0.8, 0]], [[0.8, 0], [1, 0]]]})");
    write("g2.json", R"({"gram": [[[1, 0], [0.9, 0]], [[0.9, 0], [1, 0]]]})");
    write("bad.json", R"({"dim": 2, "states": [[[1, 0], [1, 0]]]})");
  }
  static void TearDownTestSuite() { fs::remove_all(dir_); }

  static void write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
  }
  static std::string path(const std::string& name) { return (dir_ / name).string(); }

  static json result(const std::string& args) {
    const Invocation r = run(args);
    EXPECT_EQ(r.exit_code, 0) << args;
    return json::parse(r.out);
  }

  static inline fs::path dir_;
};

TEST_F(Cli, Dims) {
  const json j = result("dims --d 2 --n 2");
  EXPECT_EQ(j["result"]["sym"], 3);
  EXPECT_EQ(j["result"]["anti"], 1);
  EXPECT_EQ(j["result"]["total"], 4);
  EXPECT_EQ(j["tool"], "qcompare");
  EXPECT_EQ(j["config"]["d"], 2);
  EXPECT_EQ(j["seed"], 0);
}

TEST_F(Cli, AvgAnalyticAndMonteCarlo) {
  const json a = result("avg --d 2 --n 2 --mode any");
  EXPECT_EQ(a["result"]["analytic"], 0.75);
  const json b = result("--seed 5 avg --d 2 --n 2 --mode all --samples 4000");
  const double est = b["result"]["monte_carlo"]["estimate"];
  const double se = b["result"]["monte_carlo"]["std_error"];
  EXPECT_NEAR(est, 0.75, 4 * se);
  EXPECT_EQ(b["seed"], 5);
}

TEST_F(Cli, Prob) {
  const json j = result("prob --states " + path("pair.json") + " --mode any");
  EXPECT_NEAR(j["result"]["inconclusive"].get<double>(), 0.68, 1e-12);
  const json g = result("prob --gram " + path("g1.json") + " --mode all");
  EXPECT_NEAR(g["result"]["conclusive"].get<double>(), 0.18, 1e-12);
}

TEST_F(Cli, OtherSubcommands) {
  EXPECT_EQ(result("identicality --states " + path("orth.json") + " --n 2")["result"]["feasible"],
            true);
  const json s = result("simulate --states " + path("orth.json") + " --mode any --shots 100");
  EXPECT_EQ(s["result"]["shots"], 100);
  const json m = result("monotone --gram1 " + path("g1.json") + " --gram2 " + path("g2.json"));
  EXPECT_EQ(m["result"]["feasibility"]["verdict"], "feasible");
  EXPECT_EQ(result("conjecture --n 2 --trials 200")["result"]["violations"], 0);
  const json c = result("counterexample616 --d 2 --n 2");
  EXPECT_EQ(c["result"]["lhs"], 0.75);
  EXPECT_EQ(c["result"]["rhs"], 1.0);
  const json o = result("overlap-cert --d 2 --omega 1 --which no");
  EXPECT_EQ(o["result"]["achieved_rank"], 3);
}

TEST_F(Cli, SeedFromEnvironment) {
  const Invocation a = run("avg --d 2 --n 2 --mode any --samples 1000");
  const Invocation b = run("--seed 9 avg --d 2 --n 2 --mode any --samples 1000");
  const Invocation c = run("avg --d 2 --n 2 --mode any --samples 1000 --seed 9");
  const Invocation e = run("avg --d 2 --n 2 --mode any --samples 1000", true, "QCOMPARE_SEED=9 ");
  const Invocation f =
      run("--seed 9 avg --d 2 --n 2 --mode any --samples 1000", true, "QCOMPARE_SEED=4 ");
  EXPECT_NE(a.out, b.out);
  EXPECT_EQ(b.out, c.out);
  EXPECT_EQ(e.out, b.out);
  EXPECT_EQ(f.out, b.out);
}

TEST_F(Cli, Csv) {
  const Invocation r = run("--format csv dims --d 3 --n 2");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out.rfind("key,value\r\n", 0), 0u);
  EXPECT_NE(r.out.find("result.sym,6\r\n"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("dims --d 2").exit_code, 2);
  EXPECT_EQ(run("prob --states " + path("bad.json") + " --mode any").exit_code, 2);
  EXPECT_EQ(run("prob --states " + path("missing.json") + " --mode any").exit_code, 2);
  EXPECT_EQ(run("prob --states " + path("pair.json") + " --gram " + path("g1.json") +
                " --mode any")
                .exit_code,
            2);
  EXPECT_EQ(run("avg --d 2 --n 2 --mode any --samples 10 --analytic-only").exit_code, 2);
  EXPECT_EQ(run("overlap-cert --d 2 --omega 0.5 --which no --margin 0.1").exit_code, 2);
  EXPECT_EQ(run("identicality --states " + path("orth.json") + " --n 13").exit_code, 4);
  EXPECT_EQ(run("avg --d 2 --n 2 --mode sideways").exit_code, 2);
}

TEST_F(Cli, ErrorDiagnosticIsOneJsonLine) {
  const Invocation r = run("prob --states " + path("bad.json") + " --mode any", false);
  const std::string first = r.out.substr(0, r.out.find('\n'));
  const std::string prefix = "qcompare: ";
  ASSERT_EQ(first.rfind(prefix, 0), 0u) << r.out;
  const json diag = json::parse(first.substr(prefix.size()));
  EXPECT_EQ(diag["code"], 2);
  EXPECT_EQ(diag["error"], "invalid-input");
  EXPECT_GT(r.out.size(), first.size() + 1);
}

TEST_F(Cli, Reproducible) {
  const std::string args = "--seed 3 overlap-cert --d 3 --omega 0.5 --which yes";
  EXPECT_EQ(run(args).out, run(args).out);
}

}  // namespace
