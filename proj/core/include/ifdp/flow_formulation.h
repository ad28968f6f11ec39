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

#ifndef IFDP_FLOW_FORMULATION_H_
#define IFDP_FLOW_FORMULATION_H_

#include <span>
#include <vector>

#include "ifdp/mip.h"
#include "ifdp/model.h"

namespace ifdp {

// Single-period integer multicommodity rate model: per-flow end-to-end rate
// r_f, arc rates y_fa with flow conservation, y_fa <= sum_m u_m z_fam, and
// sum_{f,m} u_m z_fam <= c_a. Only `active` flows get variables (inactive
// flows have rate 0), and only over arcs that can carry them.
struct RateModel {
  struct AllocVar {
    FlowId flow;
    ArcId arc;
    int unit;
    int var;
  };
  struct ArcVar {
    FlowId flow;
    ArcId arc;
    int var;
  };

  MipProblem problem;
  std::vector<int> rate_var;  // -1 when inactive
  std::vector<AllocVar> alloc_vars;
  std::vector<ArcVar> arc_vars;
  AllocationMode mode = AllocationMode::kInteger;
};

// `rate_cost[f]` is the (min-sense) objective coefficient of r_f.
RateModel BuildRateModel(const Instance& inst, std::span<const double> rate_cost,
                         std::span<const char> active,
                         AllocationMode mode = AllocationMode::kInteger);

// Turns a solution of the model into a RateVector satisfying the model
// invariants exactly (integer mode: rounded unit counts with arc rates
// recomputed by max flow; continuous mode: capacity-scaled arc rates).
RateVector ExtractRateVector(const Instance& inst, const RateModel& model,
                             std::span<const double> x);

// Maximum end-to-end rate of flow f alone under integer-unit allocation,
// solved with the MIP engine. Zero when the destination is unreachable.
double MaxSingleFlowRate(const Instance& inst, FlowId f,
                         AllocationMode mode = AllocationMode::kInteger);

// s_f / MaxSingleFlowRate, or +inf when unreachable.
double EarliestCompletion(const Instance& inst, FlowId f);

}  // namespace ifdp

#endif  // IFDP_FLOW_FORMULATION_H_
