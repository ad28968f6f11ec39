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

#ifndef IFDP_BENCHMARK_RUNNER_H_
#define IFDP_BENCHMARK_RUNNER_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ifdp/report.h"
#include "ifdp/scenario.h"

namespace ifdp {

struct BenchScenario {
  std::string name;
  Scenario scenario;  // seed of the first instance; instance i uses seed + i
};

struct BenchConfig {
  std::vector<BenchScenario> scenarios;
  std::vector<std::string> solvers;
  int instances_per_cell = 10;
  double time_limit_seconds = 60.0;
  std::string output;     // CSV path; standard output when empty
  std::string plot_data;  // optional per-figure series
};

// {"scenarios": [{"name", "topology", "flows", "deadlines": "tight" |
//   "moderate" | number, "capacity", "units", "size_range": [lo, hi],
//   "seed"}], "solvers": [...], "instances": n, "time_limit": s,
//   "output": path, "plot_data": path}
BenchConfig ParseBenchConfig(std::string_view text);

struct InstanceRecord {
  std::string scenario;
  std::uint64_t seed = 0;
  std::string solver;
  SolveReport report;
  bool schedule_valid = false;
};

struct BenchRow {
  std::string scenario;
  std::string solver;
  int instances = 0;
  int skipped = 0;  // generation failed (no feasible deadline factor)
  double failure_pct = 0.0;
  int infeasible = 0;
  int timeout = 0;
  int no_solution = 0;
  double mean_gap_pct = 0.0;  // vs the CGA objective; NaN when undefined
  double mean_time_s = 0.0;
  double mean_phase1_s = 0.0;
  double mean_phase2_s = 0.0;
  double time_reduction_pct = 0.0;  // vs plain CGA; NaN for non-hybrids
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::vector<InstanceRecord> records;
};

inline constexpr const char* kBenchCsvHeader =
    "scenario,solver,instances,skipped,failure_pct,infeasible,timeout,"
    "no_solution,mean_gap_pct,mean_time_s,mean_phase1_s,mean_phase2_s,"
    "time_reduction_pct";

// Writes one CSV row per (scenario, solver) as soon as the cell finishes.
// Plain CGA is always run as the gap reference.
BenchResult RunBenchmark(const BenchConfig& config, std::ostream& csv,
                         std::ostream* plot = nullptr);

std::string FormatBenchRow(const BenchRow& row);

}  // namespace ifdp

#endif  // IFDP_BENCHMARK_RUNNER_H_
