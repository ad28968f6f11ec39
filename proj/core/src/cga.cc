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

#include "ifdp/cga.h"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "ifdp/errors.h"
#include "ifdp/flow_formulation.h"
#include "ifdp/mip.h"

namespace ifdp {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

bool IsDuplicate(std::span<const Column> pool, const RateVector& v) {
  return std::any_of(pool.begin(), pool.end(), [&](const Column& c) {
    return SameRates(c.vector, v);
  });
}

void AddUnique(std::vector<Column>& pool, RateVector v) {
  if (v.IsZero() || IsDuplicate(pool, v)) return;
  pool.push_back(Column::FromVector(std::move(v)));
}

double ArtificialCost(const Instance& inst) {
  return 1e4 * (1.0 + inst.TotalSize() / inst.network().units().front());
}

}  // namespace

Column Column::FromVector(RateVector v) {
  Column c;
  c.first_positive = v.FirstPositive();
  c.vector = std::move(v);
  return c;
}

bool SameRates(const RateVector& a, const RateVector& b) {
  if (a.rates.size() != b.rates.size()) return false;
  for (size_t f = 0; f < a.rates.size(); ++f) {
    if (std::abs(a.rates[f] - b.rates[f]) > 1e-9) return false;
  }
  return true;
}

RmpModel BuildRmp(const Instance& inst, std::span<const Column> columns,
                  const RmpOptions& options) {
  const int F = inst.flow_count();
  RmpModel m;
  LpProblem& lp = m.problem;
  std::vector<std::vector<LpTerm>> size_terms(F), deadline_terms(F);
  for (const Column& c : columns) {
    const int x = lp.AddVariable(options.phase1 ? 0.0 : 1.0);
    m.column_var.push_back(x);
    for (FlowId f = 0; f < F; ++f) {
      const double r = c.vector.rates[f];
      if (r != 0.0) size_terms[f].push_back({x, r});
      if (c.first_positive >= 0 && c.first_positive <= f) {
        deadline_terms[f].push_back({x, 1.0});
      }
    }
  }
  m.artificial_var.assign(F, -1);
  const bool artificials = options.phase1 || options.artificial_cost.has_value();
  for (FlowId f = 0; f < F; ++f) {
    if (!artificials) break;
    const int a = lp.AddVariable(options.phase1 ? 1.0 : *options.artificial_cost);
    m.artificial_var[f] = a;
    size_terms[f].push_back({a, 1.0});
  }
  for (FlowId f = 0; f < F; ++f) {
    m.size_row.push_back(
        lp.AddRow(std::move(size_terms[f]),
                  options.cover_sizes ? Relation::kGreaterEqual : Relation::kEqual,
                  inst.flow(f).size));
  }
  for (FlowId f = 0; f < F; ++f) {
    const Deadline& t = inst.flow(f).deadline;
    if (!t) {
      m.deadline_row.push_back(-1);
      continue;
    }
    m.deadline_row.push_back(
        lp.AddRow(std::move(deadline_terms[f]), Relation::kLessEqual, *t));
  }
  return m;
}

RmpState SolveRmp(const Instance& inst, std::vector<Column> columns,
                  const RmpOptions& options) {
  const int F = inst.flow_count();
  const RmpModel m = BuildRmp(inst, columns, options);
  const LpSolution sol = SolveLp(m.problem);
  RmpState s;
  s.columns = std::move(columns);
  s.phase1 = options.phase1;
  s.feasible = sol.status == LpStatus::kOptimal;
  s.duals.lambda.assign(F, 0.0);
  s.duals.pi.assign(F, 0.0);
  s.artificial.assign(F, 0.0);
  s.x.assign(s.columns.size(), 0.0);
  if (!s.feasible) return s;
  s.objective = sol.objective;
  for (size_t j = 0; j < s.columns.size(); ++j) s.x[j] = sol.x[m.column_var[j]];
  for (FlowId f = 0; f < F; ++f) {
    s.duals.lambda[f] = sol.duals[m.size_row[f]];
    if (m.deadline_row[f] >= 0) s.duals.pi[f] = sol.duals[m.deadline_row[f]];
    if (m.artificial_var[f] >= 0) s.artificial[f] = sol.x[m.artificial_var[f]];
  }
  return s;
}

double ReducedCost(const Duals& duals, const RateVector& v, double column_cost) {
  const int q = v.FirstPositive();
  if (q < 0) return column_cost;
  double rc = column_cost;
  for (size_t f = q; f < v.rates.size(); ++f) {
    rc -= duals.lambda[f] * v.rates[f] + duals.pi[f];
  }
  return rc;
}

SubproblemResult SolveSubproblem(const Instance& inst, const Duals& duals,
                                 int f_plus, const PricingOptions& options) {
  const int F = inst.flow_count();
  if (f_plus < 0 || f_plus >= F) {
    throw Error(ErrorCode::kInvalidArgument, "f+ out of range");
  }
  std::vector<double> cost(F, 0.0);
  std::vector<char> active(F, 0);
  bool any = false;
  for (FlowId f = f_plus; f < F; ++f) {
    // Flows with nonpositive size dual cannot improve the objective.
    if (duals.lambda[f] > 1e-12) {
      active[f] = 1;
      cost[f] = -duals.lambda[f];
      any = true;
    }
  }
  SubproblemResult out;
  out.objective = options.column_cost;
  out.vector.rates.assign(F, 0.0);
  if (!any) return out;

  RateModel model = BuildRateModel(inst, cost, active, options.mode);
  MipOptions mo;
  mo.time_limit_seconds = options.time_limit_seconds;
  if (options.fast) {
    double pi_tail = 0.0;
    for (FlowId f = f_plus; f < F; ++f) pi_tail += duals.pi[f];
    mo.early_exit_below = -kReducedCostTol - options.column_cost + pi_tail;
  }
  const MipSolution sol = SolveMip(model.problem, mo);
  if (sol.status == MipStatus::kInfeasible) {
    throw Error(ErrorCode::kNumericalBreakdown, "pricing MIP reported infeasible");
  }
  if (sol.status == MipStatus::kTimeLimitNoIncumbent) {
    out.proven = false;
    return out;
  }
  out.proven = sol.status == MipStatus::kOptimal;
  out.vector = ExtractRateVector(inst, model, sol.x);
  out.f_plus_plus = out.vector.FirstPositive();
  out.objective = options.column_cost + sol.objective;
  return out;
}

PricingResult Price(const Instance& inst, const Duals& duals,
                    std::span<const Column> existing,
                    const PricingOptions& options) {
  const int F = inst.flow_count();
  const auto start = Clock::now();
  PricingResult out;
  int f_plus = 0;
  while (f_plus < F) {
    PricingOptions sub = options;
    sub.time_limit_seconds = std::max(0.0, options.time_limit_seconds - Seconds(start));
    SubproblemResult sp = SolveSubproblem(inst, duals, f_plus, sub);
    out.exact = out.exact && sp.proven;
    PricingResult::Step step{f_plus, sp.f_plus_plus, sp.objective, 0.0};
    if (sp.f_plus_plus < 0) {
      step.reduced_cost = options.column_cost;
      out.trace.push_back(step);
      if (sp.proven) out.theta = std::min(out.theta, options.column_cost);
      break;
    }
    step.reduced_cost = ReducedCost(duals, sp.vector, options.column_cost);
    out.trace.push_back(step);
    const bool duplicate =
        IsDuplicate(existing, sp.vector) || IsDuplicate(out.negatives, sp.vector);
    if (!duplicate) {
      out.theta = std::min(out.theta, step.reduced_cost);
      if (step.reduced_cost < -kReducedCostTol) {
        Column c = Column::FromVector(std::move(sp.vector));
        if (!out.best || step.reduced_cost < ReducedCost(duals, out.best->vector,
                                                         options.column_cost)) {
          out.best = c;
        }
        out.negatives.push_back(std::move(c));
      }
    }
    f_plus = step.f_plus_plus + 1;
  }
  return out;
}

ScheduleConstruction ConstructSchedule(const Instance& inst,
                                       const RmpState& state) {
  const int F = inst.flow_count();
  for (FlowId f = 0; f < F; ++f) {
    if (state.artificial[f] > 1e-9 * (1.0 + inst.flow(f).size)) {
      throw Error(ErrorCode::kInfeasibleState,
                  "artificial variable of flow " +
                      std::to_string(inst.external_index()[f]) + " is positive");
    }
  }
  ScheduleConstruction out;
  std::vector<std::vector<size_t>> buckets(F);
  for (size_t j = 0; j < state.columns.size(); ++j) {
    if (state.x[j] <= 1e-9) continue;
    const auto& rates = state.columns[j].vector.rates;
    int q = -1;
    for (FlowId f = 0; f < F; ++f) {
      ++out.bucket_operations;
      if (rates[f] > kPositiveRate) {
        q = f;
        break;
      }
    }
    if (q >= 0) buckets[q].push_back(j);
  }
  double clock = 0.0;
  for (FlowId f = 0; f < F; ++f) {
    for (size_t j : buckets[f]) {
      out.schedule.segments.push_back({state.columns[j].vector, state.x[j]});
      clock += state.x[j];
    }
    out.checkpoints.push_back(clock);
  }
  return out;
}

Phase1Result Phase1(const Instance& inst, std::vector<Column> initial,
                    const PricingOptions& pricing, double time_limit_seconds) {
  const auto start = Clock::now();
  const double total = inst.TotalSize();
  PricingOptions po = pricing;
  po.column_cost = 0.0;
  std::vector<Column> columns;
  for (Column& c : initial) AddUnique(columns, std::move(c.vector));

  Phase1Result out;
  RmpOptions ro;
  ro.phase1 = true;
  while (true) {
    out.state = SolveRmp(inst, columns, ro);
    ++out.iterations;
    if (!out.state.feasible) {
      throw Error(ErrorCode::kNumericalBreakdown, "phase-I master not solvable");
    }
    if (out.state.objective <= 1e-9 * (1.0 + total)) {
      out.feasible = true;
      return out;
    }
    po.time_limit_seconds = time_limit_seconds - Seconds(start);
    if (po.time_limit_seconds <= 0.0) return out;
    PricingResult pr = Price(inst, out.state.duals, columns, po);
    if (pr.negatives.empty()) {
      out.feasible = pr.exact && out.state.objective <= 1e-6 * total;
      return out;
    }
    for (Column& c : pr.negatives) columns.push_back(std::move(c));
  }
}

CgaOutcome RunCga(const Instance& inst, const CgaOptions& options) {
  const auto start = Clock::now();
  CgaOutcome out;
  SolveReport& rep = out.result.report;
  rep.solver = options.mode == AllocationMode::kContinuous ? "CGA-continuous" : "CGA";
  const double limit = options.time_limit_seconds;
  auto remaining = [&] { return limit - Seconds(start); };
  PricingOptions po;
  po.mode = options.mode;
  po.fast = options.fast_pricing;

  std::vector<Column> columns;
  if (options.warm_start) {
    for (const Segment& s : options.warm_start->segments) {
      if (s.duration > 0.0) AddUnique(columns, s.vector);
    }
  }

  RmpOptions phase2;
  bool need_phase1 = columns.empty();
  if (!need_phase1) {
    const RmpState probe = SolveRmp(inst, columns, phase2);
    need_phase1 = !probe.feasible;
  }
  if (need_phase1) {
    const auto p1_start = Clock::now();
    Phase1Result p1 = Phase1(inst, std::move(columns), po, remaining());
    rep.phase1_iterations = p1.iterations;
    rep.phase1_seconds = Seconds(p1_start);
    if (!p1.feasible) {
      rep.status = remaining() <= 0.0 ? SolveStatus::kTimeLimit : SolveStatus::kInfeasible;
      if (rep.status == SolveStatus::kInfeasible) rep.detail = "Phase1Residual";
      rep.iterations = p1.iterations;
      rep.columns = static_cast<long>(p1.state.columns.size());
      out.final_state = std::move(p1.state);
      rep.wall_seconds = Seconds(start);
      return out;
    }
    columns = std::move(p1.state.columns);
    if (p1.state.objective > 0.0) phase2.artificial_cost = ArtificialCost(inst);
  }

  const auto p2_start = Clock::now();
  po.column_cost = 1.0;
  RmpState state;
  bool proven = false;
  bool gap_met = false;
  long iterations = 0;
  while (true) {
    state = SolveRmp(inst, columns, phase2);
    ++iterations;
    if (!state.feasible) {
      if (phase2.artificial_cost) {
        throw Error(ErrorCode::kNumericalBreakdown, "phase-II master not solvable");
      }
      phase2.artificial_cost = ArtificialCost(inst);
      continue;
    }
    out.objective_trace.push_back(state.objective);
    const bool clean = std::all_of(state.artificial.begin(), state.artificial.end(),
                                   [](double a) { return a <= 1e-9; });
    if (options.gap_bound && clean && options.gap_bound->lower_bound > 0.0) {
      const double lb = options.gap_bound->lower_bound;
      if ((state.objective - lb) / lb <= options.gap_bound->fraction + 1e-12) {
        gap_met = true;
        break;
      }
    }
    po.time_limit_seconds = remaining();
    if (po.time_limit_seconds <= 0.0) break;
    PricingResult pr = Price(inst, state.duals, columns, po);
    if (pr.negatives.empty()) {
      proven = pr.exact;
      break;
    }
    for (Column& c : pr.negatives) columns.push_back(std::move(c));
  }
  rep.phase2_seconds = Seconds(p2_start);
  rep.iterations = rep.phase1_iterations + iterations;
  rep.columns = static_cast<long>(state.columns.size());

  ScheduleConstruction built = ConstructSchedule(inst, state);
  out.bucket_operations = built.bucket_operations;
  out.result.schedule = std::move(built.schedule);
  rep.objective = state.objective;
  if (proven) {
    rep.status = SolveStatus::kOptimal;
    rep.lower_bound = state.objective;
  } else if (gap_met) {
    rep.status = SolveStatus::kFeasible;
    rep.lower_bound = options.gap_bound->lower_bound;
  } else {
    rep.status = SolveStatus::kTimeLimit;
    rep.detail = "TimeLimit";
  }
  out.final_state = std::move(state);
  rep.wall_seconds = Seconds(start);
  return out;
}

SolveResult SolveCga(const Instance& inst, const CgaOptions& options) {
  return RunCga(inst, options).result;
}

}  // namespace ifdp
