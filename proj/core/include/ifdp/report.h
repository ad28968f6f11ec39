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

#ifndef IFDP_REPORT_H_
#define IFDP_REPORT_H_

#include <optional>
#include <string>
#include <string_view>

#include "ifdp/model.h"

namespace ifdp {

enum class SolveStatus { kOptimal, kFeasible, kInfeasible, kTimeLimit, kNoSolution };

std::string_view SolveStatusName(SolveStatus status);

struct SolveReport {
  std::string solver;
  SolveStatus status = SolveStatus::kNoSolution;
  std::optional<double> objective;
  std::optional<double> lower_bound;
  long iterations = 0;
  double wall_seconds = 0.0;

  // Column generation details; zero for other solvers.
  long phase1_iterations = 0;
  double phase1_seconds = 0.0;
  double phase2_seconds = 0.0;
  long columns = 0;
  // Seconds spent outside the main loop (warm start, bound computation).
  double setup_seconds = 0.0;

  // Free-form detail such as the reason for infeasibility.
  std::string detail;

  bool HasSolution() const {
    return status == SolveStatus::kOptimal || status == SolveStatus::kFeasible;
  }
};

struct SolveResult {
  SolveReport report;
  std::optional<Schedule> schedule;
};

// Multi-line `key: value` rendering used by the CLI.
std::string FormatReport(const SolveReport& report);

}  // namespace ifdp

#endif  // IFDP_REPORT_H_
