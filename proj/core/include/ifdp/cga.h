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

#ifndef IFDP_CGA_H_
#define IFDP_CGA_H_

#include <optional>
#include <span>
#include <vector>

#include "ifdp/lp.h"
#include "ifdp/model.h"
#include "ifdp/report.h"

namespace ifdp {

struct Column {
  RateVector vector;
  int first_positive = -1;

  static Column FromVector(RateVector v);
};

// True when the rates agree within 1e-9 per component.
bool SameRates(const RateVector& a, const RateVector& b);

struct Duals {
  std::vector<double> lambda;  // size rows
  std::vector<double> pi;      // deadline rows; 0 for Unbounded flows
};

struct RmpState {
  std::vector<Column> columns;
  std::vector<double> x;
  Duals duals;
  std::vector<double> artificial;
  double objective = 0.0;
  // Solved with the phase-I objective (sum of artificials).
  bool phase1 = false;
  bool feasible = false;  // LP solved to optimality
};

struct RmpOptions {
  bool phase1 = false;
  // Phase II only: big-M cost on artificials; none when unset.
  std::optional<double> artificial_cost;
  // Size rows as >= instead of =.
  bool cover_sizes = false;
};

struct RmpModel {
  LpProblem problem;
  std::vector<int> column_var;
  std::vector<int> artificial_var;  // -1 when absent
  std::vector<int> size_row;
  std::vector<int> deadline_row;    // -1 for Unbounded flows
};

RmpModel BuildRmp(const Instance& inst, std::span<const Column> columns,
                  const RmpOptions& options = {});

RmpState SolveRmp(const Instance& inst, std::vector<Column> columns,
                  const RmpOptions& options = {});

// 1 in phase II, 0 in phase I.
double ReducedCost(const Duals& duals, const RateVector& v, double column_cost);

struct SubproblemResult {
  RateVector vector;
  int f_plus_plus = -1;  // -1 when all-zero
  double objective = 0.0;
  // False when the MIP stopped early (cutoff or time limit).
  bool proven = true;
};

struct PricingOptions {
  double column_cost = 1.0;
  AllocationMode mode = AllocationMode::kInteger;
  // Accept any column with reduced cost below -1e-7 without proving the SP
  // minimum.
  bool fast = false;
  double time_limit_seconds = kInfinity;
};

SubproblemResult SolveSubproblem(const Instance& inst, const Duals& duals,
                                 int f_plus, const PricingOptions& options = {});

struct PricingResult {
  struct Step {
    int f_plus = 0;
    int f_plus_plus = -1;
    double sp_objective = 0.0;
    double reduced_cost = 0.0;
  };
  std::optional<Column> best;
  double theta = kInfinity;
  std::vector<Column> negatives;
  std::vector<Step> trace;
  // Every subproblem of the sweep was solved to proven optimality.
  bool exact = true;
};

inline constexpr double kReducedCostTol = 1e-7;

// Sweeps f+ = 0, then f++ + 1 after each solve. `existing` columns are used
// to reject duplicates.
PricingResult Price(const Instance& inst, const Duals& duals,
                    std::span<const Column> existing,
                    const PricingOptions& options = {});

struct ScheduleConstruction {
  Schedule schedule;
  std::vector<double> checkpoints;  // p_f
  long bucket_operations = 0;
};

// Throws Error(kInfeasibleState) if an artificial is positive.
ScheduleConstruction ConstructSchedule(const Instance& inst,
                                       const RmpState& state);

struct Phase1Result {
  bool feasible = false;
  RmpState state;
  long iterations = 0;
};

Phase1Result Phase1(const Instance& inst, std::vector<Column> initial = {},
                    const PricingOptions& pricing = {},
                    double time_limit_seconds = kInfinity);

struct GapBound {
  double lower_bound = 0.0;
  double fraction = 0.0;  // p/100
};

struct CgaOptions {
  std::optional<Schedule> warm_start;
  std::optional<GapBound> gap_bound;
  double time_limit_seconds = kInfinity;
  bool fast_pricing = false;
  AllocationMode mode = AllocationMode::kInteger;
};

struct CgaOutcome {
  SolveResult result;
  RmpState final_state;
  // Phase-II RMP objective after every solve.
  std::vector<double> objective_trace;
  long bucket_operations = 0;
};

CgaOutcome RunCga(const Instance& inst, const CgaOptions& options = {});

SolveResult SolveCga(const Instance& inst, const CgaOptions& options = {});

}  // namespace ifdp

#endif  // IFDP_CGA_H_
