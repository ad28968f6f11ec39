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

#ifndef IFDP_MFA_H_
#define IFDP_MFA_H_

#include <span>
#include <vector>

#include "ifdp/lp.h"
#include "ifdp/model.h"
#include "ifdp/report.h"

namespace ifdp {

inline constexpr double kUnboundedWeight = 1e-6;

// 1/t_f^2, or kUnboundedWeight for Unbounded deadlines.
std::vector<double> DefaultMfaWeights(const Instance& inst);

// Maximizes sum_f w_f r_f over flows with remaining > 0; the others get rate 0.
// Throws Error(kPreconditionViolated) when nothing remains.
RateVector MfaStep(const Instance& inst, std::span<const double> remaining,
                   std::span<const double> weights,
                   double time_limit_seconds = kInfinity);

struct MfaOptions {
  std::vector<double> weights;  // empty: DefaultMfaWeights
  double time_limit_seconds = kInfinity;
};

struct MfaOutcome {
  SolveResult result;
  // Remaining sizes before the first step and after every step.
  std::vector<std::vector<double>> remaining_trace;
  long steps = 0;
};

MfaOutcome RunMfa(const Instance& inst, const MfaOptions& options = {});

SolveResult SolveMfa(const Instance& inst, const MfaOptions& options = {});

}  // namespace ifdp

#endif  // IFDP_MFA_H_
