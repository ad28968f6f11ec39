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

#include <gtest/gtest.h>

#include "ifdp/cga.h"
#include "ifdp/errors.h"
#include "ifdp/mfa.h"
#include "ifdp/scenario.h"
#include "test_util.h"

namespace ifdp {
namespace {

using testing::MakeInstance;

TEST(MfaWeightsTest, InverseSquaredDeadlines) {
  const Instance inst = MakeInstance(2, {{0, 1, 1}}, {1},
                                     {{0, 1, 1.0, 2.0}, {0, 1, 1.0, std::nullopt}});
  const auto w = DefaultMfaWeights(inst);
  EXPECT_DOUBLE_EQ(w[0], 0.25);
  EXPECT_DOUBLE_EQ(w[1], kUnboundedWeight);
}

TEST(MfaStepTest, Fig1PrefersEarliestDeadline) {
  const Instance inst = Fig1Instance();
  const std::vector<double> remaining = {0.5, 1.5, 1.0};
  const RateVector v = MfaStep(inst, remaining, DefaultMfaWeights(inst));
  EXPECT_EQ(v.rates, (std::vector<double>{1, 0, 0}));
  EXPECT_TRUE(CheckRateVector(inst, v).empty());
}

TEST(MfaStepTest, FinishedFlowsGetNothing) {
  const Instance inst = Fig1Instance();
  const std::vector<double> remaining = {0.0, 1.5, 1.0};
  const RateVector v = MfaStep(inst, remaining, DefaultMfaWeights(inst));
  EXPECT_EQ(v.rates, (std::vector<double>{0, 1, 0}));
}

TEST(MfaStepTest, NothingRemainingIsAnError) {
  const Instance inst = Fig1Instance();
  const std::vector<double> remaining = {0, 0, 0};
  try {
    MfaStep(inst, remaining, DefaultMfaWeights(inst));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolated);
  }
}

TEST(MfaTest, Fig1Trace) {
  const Instance inst = Fig1Instance();
  const MfaOutcome out = RunMfa(inst);
  ASSERT_EQ(out.result.report.status, SolveStatus::kFeasible);
  EXPECT_NEAR(*out.result.report.objective, 3.0, 1e-9);
  EXPECT_EQ(out.steps, 3);
  const std::vector<std::vector<double>> expected = {
      {0.5, 1.5, 1.0}, {0.0, 1.5, 1.0}, {0.0, 0.0, 1.0}, {0.0, 0.0, 0.0}};
  ASSERT_EQ(out.remaining_trace.size(), expected.size());
  for (size_t k = 0; k < expected.size(); ++k) {
    for (size_t f = 0; f < 3; ++f) {
      EXPECT_NEAR(out.remaining_trace[k][f], expected[k][f], 1e-9);
    }
  }
  EXPECT_TRUE(EvaluateSchedule(inst, *out.result.schedule).feasible);
}

TEST(MfaTest, MissedDeadlineIsNoSolution) {
  const SolveResult r = SolveMfa(testing::Fig1WithDeadlineA(0.4));
  EXPECT_EQ(r.report.status, SolveStatus::kNoSolution);
  EXPECT_NE(r.report.detail.find("DeadlineMissed"), std::string::npos);
  EXPECT_FALSE(r.schedule);
}

TEST(MfaTest, SingleFlowUsesMaxFlow) {
  // Two parallel two-hop paths of capacity 3 each, unit 1.
  const Instance inst = MakeInstance(4, {{0, 1, 3}, {1, 3, 3}, {0, 2, 3}, {2, 3, 3}}, {1},
                                     {{0, 3, 12.0, 5.0}});
  const MfaOutcome out = RunMfa(inst);
  ASSERT_EQ(out.result.report.status, SolveStatus::kFeasible);
  EXPECT_EQ(out.steps, 1);
  EXPECT_NEAR(*out.result.report.objective, 2.0, 1e-9);
}

TEST(MfaTest, UnreachableFlowStalls) {
  const Instance inst = MakeInstance(3, {{0, 1, 1}}, {1},
                                     {{0, 1, 1.0, 5.0}, {0, 2, 1.0, 5.0}});
  const SolveResult r = SolveMfa(inst);
  EXPECT_EQ(r.report.status, SolveStatus::kNoSolution);
}

TEST(MfaPropertyTest, TraceInvariants) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = GenerateTinyInstance(seed);
    const MfaOutcome out = RunMfa(inst);
    EXPECT_LE(out.steps, inst.flow_count()) << "seed " << seed;
    for (size_t k = 1; k < out.remaining_trace.size(); ++k) {
      int finished_before = 0, finished_after = 0;
      for (int f = 0; f < inst.flow_count(); ++f) {
        EXPECT_LE(out.remaining_trace[k][f], out.remaining_trace[k - 1][f] + 1e-12);
        finished_before += out.remaining_trace[k - 1][f] == 0.0;
        finished_after += out.remaining_trace[k][f] == 0.0;
      }
      EXPECT_GT(finished_after, finished_before) << "seed " << seed;
    }
    if (!out.result.report.HasSolution()) continue;
    EXPECT_TRUE(EvaluateSchedule(inst, *out.result.schedule).feasible) << "seed " << seed;
    const SolveResult cga = SolveCga(inst);
    ASSERT_EQ(cga.report.status, SolveStatus::kOptimal) << "seed " << seed;
    EXPECT_GE(*out.result.report.objective, *cga.report.objective - 1e-6) << "seed " << seed;
  }
}

}  // namespace
}  // namespace ifdp
