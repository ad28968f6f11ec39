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

#ifndef IFDP_SCENARIO_H_
#define IFDP_SCENARIO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ifdp/model.h"

namespace ifdp {

enum class Topology { kSmall, kSoftlayer, kGeant, kTriangle, kStar, kCustom };

std::string TopologyName(Topology t);
// Throws Error(kInvalidArgument) on unknown names.
Topology ParseTopology(const std::string& name);

// Undirected links of the shipped reconstructions (node/link counts 6/8,
// 11/17, 22/36); each link becomes two opposite arcs.
std::vector<std::pair<int, int>> TopologyLinks(Topology t, int* node_count);

enum class DeadlineMode { kFixed, kTight, kModerate };

struct Scenario {
  Topology topology = Topology::kSmall;
  int flow_count = 5;
  DeadlineMode deadline_mode = DeadlineMode::kTight;
  double alpha = 1.0;  // used by kFixed
  double capacity = 10.0;
  std::vector<double> units = {2.0};
  double size_min = 1.0;
  double size_max = 100.0;
  std::uint64_t seed = 1;
  // Topology::kCustom only.
  std::optional<RawInstance> custom_network;
};

// Flows with random endpoints and sizes; deadlines unset.
RawInstance GenerateFlows(const Scenario& sc);

// Deadline t_f = alpha * e_f for every flow.
Instance WithDeadlineFactor(const RawInstance& raw, double alpha);

// Bisection on alpha in (0, 4] with tolerance 0.05: the smallest factor whose
// instance column generation phase I certifies feasible. Throws
// Error(kNeverFeasible) when alpha = 4 is infeasible.
double TightAlpha(const Scenario& sc);

// Deterministic under sc.seed. The moderate mode raises the tight factor by
// 30%.
Instance GenerateInstance(const Scenario& sc);

Instance Fig1Instance();
Instance StarInstance();

// Small random instance inside the default enumeration caps.
Instance GenerateTinyInstance(std::uint64_t seed);

// Flows that all cross one arc whose usable capacity each flow can saturate.
Instance GenerateBottleneckInstance(std::uint64_t seed);

}  // namespace ifdp

#endif  // IFDP_SCENARIO_H_
