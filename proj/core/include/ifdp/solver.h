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

#ifndef IFDP_SOLVER_H_
#define IFDP_SOLVER_H_

#include <string>

#include "ifdp/lp.h"
#include "ifdp/model.h"
#include "ifdp/report.h"

namespace ifdp {

enum class Algorithm { kTsa, kCga, kMfa, kOracle, kEdf, kContinuous };

struct SolverSpec {
  Algorithm algorithm = Algorithm::kCga;
  int slices = 1;  // TSA multiplier
  bool warm_start_mfa = false;
  bool bound_rtsa = false;
  double gap_percent = 0.0;
  bool fast_pricing = false;
  double time_limit_seconds = kInfinity;

  // Canonical name such as "tsa-2x", "mfa-rtsa-cga(10)".
  std::string Name() const;
};

// Accepts the canonical names; hybrid gaps in percent inside parentheses.
// Throws Error(kInvalidArgument) otherwise.
SolverSpec ParseSolverName(const std::string& name);

// Runs the solver; hybrids report the combined wall time with the warm start
// and bound computation in setup_seconds.
SolveResult RunSolver(const Instance& inst, const SolverSpec& spec);

}  // namespace ifdp

#endif  // IFDP_SOLVER_H_
