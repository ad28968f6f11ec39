// Copyright 2026 The IFDP Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include <gtest/gtest.h>

#include "ifdp/io.h"
#include "ifdp/scenario.h"
#include "test_util.h"

namespace ifdp {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult RunCli(const std::string& args) {
  const std::string cmd = std::string(IFDP_CLI) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Data(const std::string& name) { return std::string(IFDP_DATA_DIR) + "/" + name; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ifdp_cli_" + std::string(::testing::UnitTest::GetInstance()
                                          ->current_test_info()
                                          ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Tmp(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, SolveCgaFig1) {
  const RunResult r = RunCli("solve --algorithm cga -i " + Data("fig1.json"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("objective: 3\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("status: Optimal"), std::string::npos) << r.out;
}

TEST_F(CliTest, TsaUnitSlicesInfeasible) {
  EXPECT_EQ(RunCli("solve --algorithm tsa --slices 1x -i " + Data("fig1.json")).exit_code, 1);
}

TEST_F(CliTest, MfaNoSolutionExitCode) {
  WriteInstance(Tmp("tight.json"), testing::Fig1WithDeadlineA(0.4));
  EXPECT_EQ(RunCli("solve --algorithm mfa -i " + Tmp("tight.json")).exit_code, 2);
}

TEST_F(CliTest, SolvedSchedulesValidate) {
  for (const std::string algo :
       {"cga", "mfa", "oracle", "tsa --slices 2x", "cga --warm-start mfa",
        "cga --bound rtsa --gap 10", "cga --fast-pricing"}) {
    const std::string sched = Tmp("s.json");
    ASSERT_EQ(RunCli("solve --algorithm " + algo + " -i " + Data("star.json") + " -o " + sched)
                  .exit_code,
              0)
        << algo;
    const RunResult v = RunCli("validate -i " + Data("star.json") + " -s " + sched);
    EXPECT_EQ(v.exit_code, 0) << algo << "\n" << v.out;
    EXPECT_NE(v.out.find("feasible: true"), std::string::npos);
  }
}

TEST_F(CliTest, ContinuousScheduleValidatesInContinuousMode) {
  const std::string sched = Tmp("c.json");
  ASSERT_EQ(RunCli("solve --algorithm continuous -i " + Data("fig1.json") + " -o " + sched)
                .exit_code,
            0);
  EXPECT_EQ(RunCli("validate --continuous -i " + Data("fig1.json") + " -s " + sched).exit_code,
            0);
}

TEST_F(CliTest, ValidateReportsMissedDeadline) {
  const std::string sched = Tmp("s.json");
  ASSERT_EQ(RunCli("solve --algorithm cga -i " + Data("fig1.json") + " -o " + sched).exit_code,
            0);
  WriteInstance(Tmp("tight.json"), testing::Fig1WithDeadlineA(0.4));
  const RunResult v = RunCli("validate -i " + Tmp("tight.json") + " -s " + sched);
  EXPECT_EQ(v.exit_code, 1);
  EXPECT_NE(v.out.find("violation:"), std::string::npos) << v.out;
}

TEST_F(CliTest, GenerateIsDeterministic) {
  const RunResult a = RunCli("generate --scenario small --flows 5 --seed 3");
  const RunResult b = RunCli("generate --scenario small --flows 5 --seed 3");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(ParseInstance(a.out));
}

TEST_F(CliTest, Reduce3SatThenSolve) {
  const std::string inst = Tmp("r.json");
  ASSERT_EQ(RunCli("reduce3sat -i " + Data("unsat8.cnf") + " -o " + inst).exit_code, 0);
  EXPECT_EQ(RunCli("solve --algorithm cga -i " + inst).exit_code, 1);
}

TEST_F(CliTest, BenchWritesCsv) {
  const std::string csv = Tmp("out.csv"), plot = Tmp("plot.csv");
  ASSERT_EQ(RunCli("bench --config " + Data("bench_fig1.json") + " --output " + csv +
                " --emit-plot-data " + plot)
                .exit_code,
            0);
  const std::string text = ReadTextFile(csv);
  EXPECT_EQ(text.rfind("scenario,solver,", 0), 0u);
  EXPECT_TRUE(fs::exists(plot));
}

TEST_F(CliTest, UsageAndParseErrors) {
  EXPECT_EQ(RunCli("").exit_code, 4);
  EXPECT_EQ(RunCli("solve").exit_code, 4);
  EXPECT_EQ(RunCli("solve --algorithm simplex -i " + Data("fig1.json")).exit_code, 4);
  EXPECT_EQ(RunCli("solve --algorithm cga -i " + Tmp("missing.json")).exit_code, 4);
  WriteTextFile(Tmp("bad.json"), "{\"nodes\": 3,");
  EXPECT_EQ(RunCli("solve --algorithm cga -i " + Tmp("bad.json")).exit_code, 4);
  EXPECT_EQ(RunCli("solve --algorithm mfa --warm-start mfa -i " + Data("fig1.json")).exit_code,
            4);
}

}  // namespace
}  // namespace ifdp
