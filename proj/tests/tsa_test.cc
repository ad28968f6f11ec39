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

#include <cmath>

#include <gtest/gtest.h>

#include "ifdp/cga.h"
#include "ifdp/errors.h"
#include "ifdp/flow_formulation.h"
#include "ifdp/scenario.h"
#include "ifdp/tsa.h"
#include "test_util.h"

namespace ifdp {
namespace {

using testing::MakeInstance;

TEST(SliceTest, Fig1OneX) {
  EXPECT_EQ(MakeSlices(Fig1Instance(), 1).boundaries(), (std::vector<double>{0, 1, 2, 3}));
}

TEST(SliceTest, Fig1TwoXHalves) {
  const SliceGrid g = MakeSlices(Fig1Instance(), 2);
  ASSERT_EQ(g.slice_count(), 6);
  for (int t = 0; t < 6; ++t) EXPECT_DOUBLE_EQ(g.length(t), 0.5);
}

TEST(SliceTest, BisectsEarliestLongestSlice) {
  // Deadlines 2 and 3: slices [0,2], (2,3]; 2x needs 4 slices.
  const Instance inst = MakeInstance(2, {{0, 1, 1}}, {1}, {{0, 1, 1, 2.0}, {0, 1, 1, 3.0}});
  EXPECT_EQ(MakeSlices(inst, 2).boundaries(), (std::vector<double>{0, 0.5, 1, 2, 3}));
  EXPECT_EQ(MakeSlices(inst, 3).slice_count(), 6);
}

TEST(SliceTest, SingleFlow) {
  const Instance inst = MakeInstance(2, {{0, 1, 1}}, {1}, {{0, 1, 1, 5.0}});
  EXPECT_EQ(MakeSlices(inst, 1).boundaries(), (std::vector<double>{0, 5}));
}

TEST(SliceTest, UnboundedNeedsHorizon) {
  const Instance inst = MakeInstance(2, {{0, 1, 1}}, {1}, {{0, 1, 1, std::nullopt}});
  try {
    MakeSlices(inst, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoDeadlines);
  }
  EXPECT_EQ(MakeSlices(inst, 1, 4.0).boundaries(), (std::vector<double>{0, 4}));
}

TEST(SliceTest, GridValidation) {
  EXPECT_THROW(SliceGrid({0.0}), Error);
  EXPECT_THROW(SliceGrid({0.0, 1.0, 1.0}), Error);
  EXPECT_THROW(SliceGrid({0.5, 1.0}), Error);
}

TEST(TsaTest, Fig1UnitSlicesInfeasible) {
  const SolveResult r = SolveTsaOnGrid(Fig1Instance(), SliceGrid({0, 1, 2, 3}));
  EXPECT_EQ(r.report.status, SolveStatus::kInfeasible);
  EXPECT_EQ(r.report.detail, "GridOrInstanceInfeasible");
  EXPECT_FALSE(r.schedule);
}

TEST(TsaTest, Fig1HalfSlicesOptimal) {
  const Instance inst = Fig1Instance();
  const SolveResult r = SolveTsa(inst, 2);
  ASSERT_EQ(r.report.status, SolveStatus::kOptimal);
  EXPECT_NEAR(*r.report.objective, 3.0, 1e-6);
  ASSERT_TRUE(r.schedule);
  EXPECT_TRUE(EvaluateSchedule(inst, *r.schedule).feasible);
  EXPECT_NEAR(r.schedule->Completion(), 3.0, 1e-9);
}

TEST(TsaTest, Fig1UnevenSlicesOptimal) {
  const Instance inst = Fig1Instance();
  const SolveResult r = SolveTsaOnGrid(inst, SliceGrid({0, 0.5, 2, 3}));
  ASSERT_EQ(r.report.status, SolveStatus::kOptimal);
  EXPECT_NEAR(*r.report.objective, 3.0, 1e-6);
  EXPECT_TRUE(EvaluateSchedule(inst, *r.schedule).feasible);
}

TEST(TsaTest, MultiplierNeverHurtsOnFig1Family) {
  const Instance inst = Fig1Instance();
  EXPECT_EQ(SolveTsa(inst, 1).report.status, SolveStatus::kInfeasible);
  const double two = *SolveTsa(inst, 2).report.objective;
  const SolveResult three = SolveTsa(inst, 3);
  ASSERT_TRUE(three.report.HasSolution());
  EXPECT_NEAR(two, 3.0, 1e-6);
  EXPECT_LE(*three.report.objective, 3.0 + 1e-6);
}

TEST(TsaTest, UsedSlicesAreConsecutive) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Instance inst = GenerateTinyInstance(seed);
    const SliceGrid grid = [&] {
      double horizon = 0.0;
      for (FlowId f = 0; f < inst.flow_count(); ++f) horizon += EarliestCompletion(inst, f);
      return MakeSlices(inst, 2, horizon);
    }();
    const TsaModel model = BuildTsa(inst, grid);
    const MipSolution sol = SolveMip(model.problem);
    if (sol.x.empty()) continue;
    for (size_t t = 1; t < model.used_var.size(); ++t) {
      EXPECT_GE(sol.x[model.used_var[t - 1]], sol.x[model.used_var[t]]) << "seed " << seed;
    }
    const SolveResult r = SolveTsaOnGrid(inst, grid);
    ASSERT_TRUE(r.schedule);
    const auto eval = EvaluateSchedule(inst, *r.schedule);
    EXPECT_TRUE(eval.feasible) << "seed " << seed;
  }
}

TEST(RtsaTest, Fig1BoundIsTwoAndAHalf) {
  EXPECT_NEAR(RtsaLowerBound(Fig1Instance()), 2.5, 0.01);
  EXPECT_FALSE(RtsaFeasible(Fig1Instance(), 2.49));
  EXPECT_TRUE(RtsaFeasible(Fig1Instance(), 2.51));
}

TEST(RtsaTest, SingleFlowBoundIsEarliestCompletion) {
  const Instance inst = MakeInstance(3, {{0, 1, 4}, {1, 2, 4}}, {2}, {{0, 2, 6.0, 10.0}});
  EXPECT_NEAR(RtsaLowerBound(inst, 1e-4), 1.5, 1e-3);
}

TEST(RtsaTest, DisjointFlowsBoundIsMaxEarliestCompletion) {
  const Instance inst = MakeInstance(4, {{0, 1, 1}, {2, 3, 2}}, {1},
                                     {{0, 1, 3.0, 9.0}, {2, 3, 5.0, 9.0}});
  EXPECT_NEAR(RtsaLowerBound(inst, 1e-4), 3.0, 1e-3);
}

TEST(RtsaTest, UnreachableFlowThrows) {
  const Instance inst = MakeInstance(3, {{0, 1, 1}}, {1}, {{0, 2, 1.0, 1.0}});
  try {
    RtsaLowerBound(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnreachable);
  }
}

TEST(RtsaTest, NeverExceedsOptimum) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Instance inst = GenerateTinyInstance(seed);
    const SolveResult r = SolveCga(inst);
    if (r.report.status != SolveStatus::kOptimal) continue;
    EXPECT_LE(RtsaLowerBound(inst), *r.report.objective + 1e-6) << "seed " << seed;
  }
}

}  // namespace
}  // namespace ifdp
