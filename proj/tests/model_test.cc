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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "ifdp/errors.h"
#include "ifdp/flow_formulation.h"
#include "ifdp/model.h"
#include "ifdp/scenario.h"
#include "test_util.h"

namespace ifdp {
namespace {

using testing::MakeInstance;

// Single-flow vector along the given arcs with one unit each.
RateVector PathVector(const Instance& inst, FlowId f, std::vector<ArcId> arcs,
                      double rate) {
  std::vector<UnitAllocation> alloc;
  for (ArcId a : arcs) alloc.push_back({f, a, 0, 1});
  std::vector<double> target(inst.flow_count(), 0.0);
  target[f] = rate;
  return RealizeAllocation(inst, alloc, target);
}

Schedule Fig1PaperSchedule(const Instance& inst) {
  // Arcs: 0 = (0,1), 1 = (1,2), 2 = (2,0).
  return Schedule{{{PathVector(inst, 0, {0, 1}, 1.0), 0.5},
                   {PathVector(inst, 1, {1, 2}, 1.0), 1.5},
                   {PathVector(inst, 2, {2, 0}, 1.0), 1.0}}};
}

TEST(ModelTest, Fig1IsValidAndAlreadyOrdered) {
  const Instance inst = Fig1Instance();
  EXPECT_EQ(inst.flow_count(), 3);
  EXPECT_EQ(inst.external_index(), (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(inst.AllDeadlinesBounded());
}

TEST(ModelTest, ZeroCapacityNetworkIsValid) {
  EXPECT_NO_THROW(MakeInstance(2, {{0, 1, 0.0}}, {1}, {{0, 1, 1.0, 1.0}}));
}

TEST(ModelTest, ZeroSizeIsMalformed) {
  try {
    MakeInstance(2, {{0, 1, 1.0}}, {1}, {{0, 1, 0.0, 1.0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedInstance);
  }
}

TEST(ModelTest, EmptyFlows) {
  try {
    MakeInstance(2, {{0, 1, 1.0}}, {1}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyFlows);
  }
}

TEST(ModelTest, DiagnoseListsEveryViolation) {
  RawInstance raw;
  raw.node_count = 2;
  raw.arcs = {{0, 0, 1.0}, {0, 1, -1.0}, {0, 1, 2.0}, {0, 5, 1.0}};
  raw.units = {2.0, 1.0, 1.0};
  raw.flows = {{0, 0, 1.0, 1.0}, {0, 1, -2.0, 0.0}};
  EXPECT_GE(DiagnoseInstance(raw).size(), 7u);
}

TEST(ModelTest, DeadlineOrderIsStableWithUnboundedLast) {
  const Instance inst = MakeInstance(
      2, {{0, 1, 1.0}}, {1},
      {{0, 1, 1.0, std::nullopt}, {0, 1, 1.0, 3.0}, {0, 1, 2.0, 1.0}, {0, 1, 3.0, 3.0}});
  EXPECT_EQ(inst.external_index(), (std::vector<int>{2, 1, 3, 0}));
  for (int e = 0; e < 4; ++e) EXPECT_EQ(inst.external_index()[inst.internal_index()[e]], e);
}

TEST(ModelTest, NormalizationIsIdempotent) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = GenerateTinyInstance(seed);
    EXPECT_EQ(Instance::Create(inst.ToRaw()), inst);
  }
}

TEST(ModelTest, UsableCapacity) {
  const Network net(2, {{0, 1, 3.0}}, {2.0});
  EXPECT_DOUBLE_EQ(net.UsableCapacity(3.0), 2.0);
  EXPECT_DOUBLE_EQ(net.UsableCapacity(10.0), 10.0);
  const Network mixed(2, {{0, 1, 7.0}}, {2.0, 5.0});
  EXPECT_DOUBLE_EQ(mixed.UsableCapacity(7.0), 7.0);
  EXPECT_DOUBLE_EQ(mixed.UsableCapacity(6.0), 6.0);
  EXPECT_DOUBLE_EQ(mixed.UsableCapacity(3.0), 2.0);
}

TEST(MaxSingleFlowRateTest, Fig1FlowA) {
  const Instance inst = Fig1Instance();
  EXPECT_NEAR(MaxSingleFlowRate(inst, 0), 1.0, 1e-9);
  EXPECT_NEAR(EarliestCompletion(inst, 0), 0.5, 1e-9);
}

TEST(MaxSingleFlowRateTest, Disconnected) {
  const Instance inst = MakeInstance(3, {{0, 1, 1.0}}, {1}, {{0, 2, 1.0, 1.0}});
  EXPECT_EQ(MaxSingleFlowRate(inst, 0), 0.0);
  EXPECT_EQ(EarliestCompletion(inst, 0), kInfinity);
}

TEST(MaxSingleFlowRateTest, SingleArcUnitsOfTwo) {
  const Instance inst = MakeInstance(2, {{0, 1, 10.0}}, {2}, {{0, 1, 5.0, 1.0}});
  EXPECT_NEAR(MaxSingleFlowRate(inst, 0), 10.0, 1e-9);
  const Instance odd = MakeInstance(2, {{0, 1, 9.0}}, {2}, {{0, 1, 5.0, 1.0}});
  EXPECT_NEAR(MaxSingleFlowRate(odd, 0), 8.0, 1e-9);
}

TEST(MaxSingleFlowRateTest, ParallelPathsAddUp) {
  // 0->1->3 (cap 3) and 0->2->3 (cap 5), unit 2: 2 + 4.
  const Instance inst = MakeInstance(
      4, {{0, 1, 3.0}, {1, 3, 3.0}, {0, 2, 5.0}, {2, 3, 5.0}}, {2}, {{0, 3, 1.0, 1.0}});
  EXPECT_NEAR(MaxSingleFlowRate(inst, 0), 6.0, 1e-9);
  EXPECT_NEAR(MaxSingleFlowRate(inst, 0, AllocationMode::kContinuous), 8.0, 1e-9);
}

TEST(CheckRateVectorTest, DetectsOverAllocation) {
  const Instance inst = Fig1Instance();
  RateVector v = PathVector(inst, 0, {0, 1}, 1.0);
  EXPECT_TRUE(CheckRateVector(inst, v).empty());
  v.allocation.push_back({2, 0, 0, 1});
  EXPECT_FALSE(CheckRateVector(inst, v).empty());
}

TEST(CheckRateVectorTest, DetectsBrokenConservation) {
  const Instance inst = Fig1Instance();
  RateVector v = PathVector(inst, 0, {0, 1}, 1.0);
  v.rates[0] = 1.0 + 1e-3;
  EXPECT_FALSE(CheckRateVector(inst, v).empty());
}

TEST(EvaluateScheduleTest, Fig1PaperScheduleIsFeasible) {
  const Instance inst = Fig1Instance();
  const auto eval = EvaluateSchedule(inst, Fig1PaperSchedule(inst));
  EXPECT_TRUE(eval.feasible);
  EXPECT_NEAR(eval.completion, 3.0, 1e-12);
  EXPECT_NEAR(eval.finish[0], 0.5, 1e-12);
  EXPECT_NEAR(eval.finish[1], 2.0, 1e-12);
  EXPECT_NEAR(eval.finish[2], 3.0, 1e-12);
}

TEST(EvaluateScheduleTest, EmptyScheduleDeliversNothing) {
  const Instance inst = Fig1Instance();
  const auto eval = EvaluateSchedule(inst, Schedule{});
  EXPECT_FALSE(eval.feasible);
  for (double d : eval.delivered) EXPECT_EQ(d, 0.0);
  EXPECT_EQ(eval.completion, 0.0);
}

TEST(EvaluateScheduleTest, LateFlowIsReported) {
  const Instance inst = Fig1Instance();
  Schedule s = Fig1PaperSchedule(inst);
  std::swap(s.segments[0], s.segments[1]);
  const auto eval = EvaluateSchedule(inst, s);
  EXPECT_FALSE(eval.feasible);
  EXPECT_NEAR(eval.finish[0], 2.0, 1e-12);
  EXPECT_FALSE(eval.violations.empty());
}

TEST(EvaluateScheduleTest, DeliveryIsPermutationInvariant) {
  const Instance inst = Fig1Instance();
  Schedule s = Fig1PaperSchedule(inst);
  s.segments.push_back({PathVector(inst, 0, {0, 1}, 1.0), 0.25});
  const auto base = EvaluateSchedule(inst, s).delivered;
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(s.segments.begin(), s.segments.end(), rng);
    const auto d = EvaluateSchedule(inst, s).delivered;
    for (int f = 0; f < 3; ++f) EXPECT_NEAR(d[f], base[f], 1e-12);
  }
}

TEST(EvaluateScheduleTest, ContinuousModeAcceptsFractionalSharing) {
  const Instance inst = Fig1Instance();
  RateVector v;
  v.rates = {0.5, 0.5, 0.5};
  v.arc_rates = {{0, 0, 0.5}, {0, 1, 0.5}, {1, 1, 0.5}, {1, 2, 0.5},
                 {2, 2, 0.5}, {2, 0, 0.5}};
  EXPECT_TRUE(CheckRateVector(inst, v, AllocationMode::kContinuous).empty());
  EXPECT_FALSE(CheckRateVector(inst, v, AllocationMode::kInteger).empty());
}

}  // namespace
}  // namespace ifdp
