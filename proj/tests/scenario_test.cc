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
#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "ifdp/cga.h"
#include "ifdp/errors.h"
#include "ifdp/flow_formulation.h"
#include "ifdp/oracle.h"
#include "ifdp/scenario.h"
#include "test_util.h"

namespace ifdp {
namespace {

bool Connected(int n, const std::vector<std::pair<int, int>>& links) {
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : links) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack = {0};
  seen[0] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return std::count(seen.begin(), seen.end(), true) == n;
}

TEST(TopologyTest, NodeAndLinkCounts) {
  const std::vector<std::tuple<Topology, int, int>> expected = {
      {Topology::kSmall, 6, 8}, {Topology::kSoftlayer, 11, 17}, {Topology::kGeant, 22, 36}};
  for (auto [t, nodes, links] : expected) {
    int n = 0;
    const auto l = TopologyLinks(t, &n);
    EXPECT_EQ(n, nodes) << TopologyName(t);
    EXPECT_EQ(static_cast<int>(l.size()), links) << TopologyName(t);
    std::set<std::pair<int, int>> distinct;
    for (auto [a, b] : l) distinct.insert({std::min(a, b), std::max(a, b)});
    EXPECT_EQ(distinct.size(), l.size());
    EXPECT_TRUE(Connected(n, l)) << TopologyName(t);
  }
}

TEST(TopologyTest, NamesRoundTrip) {
  for (Topology t : {Topology::kSmall, Topology::kSoftlayer, Topology::kGeant,
                     Topology::kTriangle, Topology::kStar}) {
    EXPECT_EQ(ParseTopology(TopologyName(t)), t);
  }
  EXPECT_THROW(ParseTopology("mesh"), Error);
}

TEST(GenerateTest, TriangleIsFig1) {
  Scenario sc;
  sc.topology = Topology::kTriangle;
  sc.flow_count = 3;
  const Instance inst = GenerateInstance(sc);
  EXPECT_EQ(inst, Fig1Instance());
  const std::vector<double> sizes = {0.5, 1.5, 1.0}, deadlines = {1, 2, 3};
  for (int f = 0; f < 3; ++f) {
    EXPECT_EQ(inst.flow(f).size, sizes[f]);
    EXPECT_EQ(*inst.flow(f).deadline, deadlines[f]);
  }
}

TEST(GenerateTest, StarMatchesReconstruction) {
  const Instance inst = StarInstance();
  EXPECT_EQ(inst.network().node_count(), 5);
  EXPECT_EQ(inst.flow_count(), 4);
  const RawInstance raw = inst.ToRaw();
  EXPECT_EQ(raw.arcs.size(), 4u);
  for (const Arc& a : raw.arcs) EXPECT_EQ(a.capacity, 1.0);
  EXPECT_EQ(raw.flows[3].origin, 1);
  EXPECT_EQ(raw.flows[3].destination, 3);
  EXPECT_EQ(raw.flows[3].size, 2.0);
}

TEST(GenerateTest, DeterministicUnderSeed) {
  Scenario sc;
  sc.deadline_mode = DeadlineMode::kFixed;
  sc.alpha = 2.0;
  sc.seed = 42;
  EXPECT_EQ(GenerateInstance(sc), GenerateInstance(sc));
  Scenario other = sc;
  other.seed = 43;
  EXPECT_FALSE(GenerateInstance(sc) == GenerateInstance(other));
}

TEST(GenerateTest, DeadlinesAreAlphaTimesSingleFlowTime) {
  for (Topology t : {Topology::kSmall, Topology::kSoftlayer, Topology::kGeant}) {
    Scenario sc;
    sc.topology = t;
    sc.flow_count = 10;
    sc.deadline_mode = DeadlineMode::kFixed;
    sc.alpha = 1.7;
    sc.seed = 5;
    const Instance inst = GenerateInstance(sc);
    for (int f = 0; f < inst.flow_count(); ++f) {
      const Flow& fl = inst.flow(f);
      EXPECT_NE(fl.origin, fl.destination);
      EXPECT_GE(fl.size, 1.0);
      EXPECT_LE(fl.size, 100.0);
      const double e = fl.size / MaxSingleFlowRate(inst, f);
      EXPECT_NEAR(*fl.deadline, 1.7 * e, 1e-9 * std::max(1.0, e));
    }
  }
}

TEST(GenerateTest, Fig1DeadlineFactor) {
  const RawInstance raw = Fig1Instance().ToRaw();
  EXPECT_TRUE(SolveFullMp(WithDeadlineFactor(raw, 2.0)).report.HasSolution());
  EXPECT_EQ(SolveFullMp(WithDeadlineFactor(raw, 1.0)).report.status,
            SolveStatus::kInfeasible);
}

TEST(TightAlphaTest, SingleFlowIsOne) {
  Scenario sc;
  sc.flow_count = 1;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    sc.seed = seed;
    const double a = TightAlpha(sc);
    EXPECT_GE(a, 1.0 - 1e-9);
    EXPECT_LE(a, 1.05 + 1e-9);
  }
}

TEST(TightAlphaTest, BracketsTheBoundary) {
  Scenario sc;
  sc.flow_count = 5;
  sc.seed = 3;
  const double a = TightAlpha(sc);
  EXPECT_EQ(a, TightAlpha(sc));
  const RawInstance raw = GenerateFlows(sc);
  EXPECT_TRUE(Phase1(WithDeadlineFactor(raw, a)).feasible);
  EXPECT_FALSE(Phase1(WithDeadlineFactor(raw, a - 0.05)).feasible);
}

TEST(TightAlphaTest, ModerateIsThirtyPercentLooser) {
  Scenario sc;
  sc.flow_count = 5;
  sc.seed = 9;
  const double a = TightAlpha(sc);
  sc.deadline_mode = DeadlineMode::kModerate;
  const Instance inst = GenerateInstance(sc);
  for (int f = 0; f < inst.flow_count(); ++f) {
    const double e = inst.flow(f).size / MaxSingleFlowRate(inst, f);
    EXPECT_NEAR(*inst.flow(f).deadline, 1.3 * a * e, 1e-9 * std::max(1.0, e));
  }
}

TEST(TightAlphaTest, NeverFeasible) {
  // Nine flows of single-flow time 5 share one arc; 4x deadlines end at 20.
  Scenario sc;
  sc.topology = Topology::kCustom;
  RawInstance net;
  net.node_count = 2;
  net.arcs = {{0, 1, 2}};
  net.units = {2};
  sc.custom_network = net;
  sc.flow_count = 9;
  sc.size_min = sc.size_max = 10;
  try {
    TightAlpha(sc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNeverFeasible);
  }
}

TEST(GenerateTest, DisconnectedCustomNetwork) {
  Scenario sc;
  sc.topology = Topology::kCustom;
  RawInstance net;
  net.node_count = 3;
  net.arcs = {{0, 1, 0.5}};
  net.units = {1};
  sc.custom_network = net;
  sc.deadline_mode = DeadlineMode::kFixed;
  try {
    GenerateInstance(sc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
  }
}

TEST(GenerateTest, TinyInstancesRespectOracleCaps) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Instance inst = GenerateTinyInstance(seed);
    EXPECT_LE(inst.network().node_count(), 5);
    EXPECT_LE(inst.flow_count(), 4);
    EXPECT_NO_THROW(EnumerateRateVectors(inst)) << "seed " << seed;
  }
}

}  // namespace
}  // namespace ifdp
