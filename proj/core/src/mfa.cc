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

#include "ifdp/mfa.h"

#include <algorithm>
#include <chrono>

#include "ifdp/errors.h"
#include "ifdp/flow_formulation.h"
#include "ifdp/mip.h"

namespace ifdp {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

}  // namespace

std::vector<double> DefaultMfaWeights(const Instance& inst) {
  std::vector<double> w;
  for (const Flow& f : inst.flows()) {
    w.push_back(f.deadline ? 1.0 / (*f.deadline * *f.deadline) : kUnboundedWeight);
  }
  return w;
}

RateVector MfaStep(const Instance& inst, std::span<const double> remaining,
                   std::span<const double> weights, double time_limit_seconds) {
  const int F = inst.flow_count();
  std::vector<double> cost(F, 0.0);
  std::vector<char> active(F, 0);
  bool any = false;
  for (FlowId f = 0; f < F; ++f) {
    if (remaining[f] > 0.0) {
      active[f] = 1;
      cost[f] = -weights[f];
      any = true;
    }
  }
  if (!any) {
    throw Error(ErrorCode::kPreconditionViolated, "no flow has remaining size");
  }
  RateModel model = BuildRateModel(inst, cost, active);
  RateVector zero;
  zero.rates.assign(F, 0.0);
  if (model.problem.lp.variable_count() == 0) return zero;
  MipOptions mo;
  mo.time_limit_seconds = time_limit_seconds;
  const MipSolution sol = SolveMip(model.problem, mo);
  if (sol.x.empty()) return zero;
  return ExtractRateVector(inst, model, sol.x);
}

MfaOutcome RunMfa(const Instance& inst, const MfaOptions& options) {
  const auto start = Clock::now();
  const int F = inst.flow_count();
  MfaOutcome out;
  SolveReport& rep = out.result.report;
  rep.solver = "MFA";
  const std::vector<double> weights =
      options.weights.empty() ? DefaultMfaWeights(inst) : options.weights;
  if (static_cast<int>(weights.size()) != F ||
      std::any_of(weights.begin(), weights.end(), [](double w) { return !(w > 0.0); })) {
    throw Error(ErrorCode::kInvalidArgument, "MFA weights must be positive, one per flow");
  }
  std::vector<double> remaining;
  for (const Flow& f : inst.flows()) remaining.push_back(f.size);
  out.remaining_trace.push_back(remaining);

  Schedule sched;
  double chi = 0.0;
  auto finish = [&](SolveStatus status, std::string detail) {
    rep.status = status;
    rep.detail = std::move(detail);
    rep.iterations = out.steps;
    rep.wall_seconds = Seconds(start);
  };
  auto pending = [&] {
    return std::any_of(remaining.begin(), remaining.end(), [](double s) { return s > 0.0; });
  };
  while (pending()) {
    const double left = options.time_limit_seconds - Seconds(start);
    if (left <= 0.0) {
      finish(SolveStatus::kTimeLimit, "TimeLimit");
      return out;
    }
    RateVector r = MfaStep(inst, remaining, weights, left);
    ++out.steps;
    int f_star = -1;
    double delta = kInfinity;
    for (FlowId f = 0; f < F; ++f) {
      if (remaining[f] > 0.0 && r.rates[f] > kPositiveRate) {
        const double d = remaining[f] / r.rates[f];
        if (d < delta) {
          delta = d;
          f_star = f;
        }
      }
    }
    if (f_star < 0) {
      finish(SolveStatus::kNoSolution, "Stall");
      return out;
    }
    // Every flow finishing in this step must meet its deadline.
    for (FlowId f = 0; f < F; ++f) {
      if (remaining[f] <= 0.0 || r.rates[f] <= kPositiveRate) continue;
      const bool completes =
          remaining[f] - r.rates[f] * delta <= 1e-9 * inst.flow(f).size;
      const Deadline& t = inst.flow(f).deadline;
      if ((completes || f == f_star) && t && chi + delta > *t + kTimeAbsTol) {
        finish(SolveStatus::kNoSolution,
               "DeadlineMissed flow " + std::to_string(inst.external_index()[f]));
        return out;
      }
    }
    for (FlowId f = 0; f < F; ++f) {
      if (remaining[f] <= 0.0) continue;
      remaining[f] -= r.rates[f] * delta;
      if (f == f_star || remaining[f] <= 1e-9 * inst.flow(f).size) {
        remaining[f] = 0.0;
      }
    }
    sched.segments.push_back({std::move(r), delta});
    chi += delta;
    out.remaining_trace.push_back(remaining);
  }
  rep.objective = chi;
  out.result.schedule = std::move(sched);
  finish(SolveStatus::kFeasible, "");
  return out;
}

SolveResult SolveMfa(const Instance& inst, const MfaOptions& options) {
  return RunMfa(inst, options).result;
}

}  // namespace ifdp
