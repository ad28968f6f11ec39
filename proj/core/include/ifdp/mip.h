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

#ifndef IFDP_MIP_H_
#define IFDP_MIP_H_

#include <optional>
#include <vector>

#include "ifdp/lp.h"

namespace ifdp {

// Integer-restricted variables must carry finite bounds; binaries are
// integers bounded by [0, 1].
struct MipProblem {
  LpProblem lp;
  std::vector<int> integer_vars;
  // Subset of integer_vars branched on before the others.
  std::vector<int> branch_first;
};

enum class MipStatus { kOptimal, kFeasible, kInfeasible, kTimeLimitNoIncumbent };

const char* MipStatusName(MipStatus status);

struct MipSolution {
  MipStatus status = MipStatus::kInfeasible;
  std::vector<double> x;
  double objective = kInfinity;
  double best_bound = -kInfinity;
  long nodes = 0;
  long lp_iterations = 0;
  // Global lower bound after every processed node (when requested).
  std::vector<double> bound_trace;
};

struct MipOptions {
  double time_limit_seconds = kInfinity;
  // Stop as soon as the incumbent objective drops below this value.
  std::optional<double> early_exit_below;
  double integrality_tol = 1e-6;
  long node_limit = -1;
  bool record_bound_trace = false;
  LpOptions lp;
};

// Branch-and-bound over the LP relaxation: one depth-first dive for an
// incumbent, then best-bound-first. Branches on the most fractional integer
// variable (ties by lowest index). Child LPs are warm-started with the dual
// simplex.
MipSolution SolveMip(const MipProblem& problem, const MipOptions& options = {});

}  // namespace ifdp

#endif  // IFDP_MIP_H_
