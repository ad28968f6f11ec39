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

#include "ifdp/tsa.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <set>

#include "ifdp/errors.h"
#include "ifdp/maxflow.h"

namespace ifdp {
namespace {

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since)
      .count();
}

// Adds one slice's rate, arc-rate and allocation variables to `lp` and
// collects the allocation terms of every arc capacity row.
void AddSliceVariables(const Instance& inst, LpProblem& lp,
                       std::vector<int>& integer_vars, RateModel& model,
                       std::vector<std::vector<LpTerm>>& cap_terms,
                       std::span<const char> active, bool integer) {
  const Network& net = inst.network();
  const int F = inst.flow_count();
  model.rate_var.assign(F, -1);
  cap_terms.assign(net.arc_count(), {});
  for (FlowId f = 0; f < F; ++f) {
    if (!active[f]) continue;
    const Flow& flow = inst.flow(f);
    const auto arcs = RelevantArcs(net, flow.origin, flow.destination);
    if (arcs.empty()) continue;
    const int r = lp.AddVariable(0.0, 0.0, kInfinity);
    model.rate_var[f] = r;
    std::map<NodeId, std::vector<LpTerm>> balance;
    for (ArcId a : arcs) {
      const Arc& arc = net.arc(a);
      const int y = lp.AddVariable(0.0, 0.0, kInfinity);
      model.arc_vars.push_back({f, a, y});
      balance[arc.tail].push_back({y, 1.0});
      balance[arc.head].push_back({y, -1.0});
      std::vector<LpTerm> link = {{y, 1.0}};
      for (int m = 0; m < net.unit_count(); ++m) {
        const int max_count = net.MaxUnitCount(a, m);
        if (max_count <= 0) continue;
        const double u = net.units()[m];
        const int z = lp.AddVariable(0.0, 0.0, max_count);
        if (integer) integer_vars.push_back(z);
        model.alloc_vars.push_back({f, a, m, z});
        link.push_back({z, -u});
        cap_terms[a].push_back({z, u});
      }
      lp.AddRow(std::move(link), Relation::kLessEqual, 0.0);
    }
    balance[flow.origin].push_back({r, -1.0});
    balance[flow.destination].push_back({r, 1.0});
    for (auto& [node, terms] : balance) {
      lp.AddRow(std::move(terms), Relation::kEqual, 0.0);
    }
  }
}

}  // namespace

SliceGrid::SliceGrid(std::vector<double> boundaries)
    : boundaries_(std::move(boundaries)) {
  if (boundaries_.size() < 2 || boundaries_.front() != 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "slice grid needs boundaries starting at 0 and at least one slice");
  }
  for (size_t i = 1; i < boundaries_.size(); ++i) {
    if (!(boundaries_[i] > boundaries_[i - 1]) || !std::isfinite(boundaries_[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "slice boundaries must be finite and strictly increasing");
    }
  }
}

SliceGrid MakeSlices(const Instance& inst, int multiplier,
                     std::optional<double> horizon) {
  if (multiplier < 1) {
    throw Error(ErrorCode::kInvalidArgument, "slice multiplier must be >= 1");
  }
  std::set<double> points;
  bool has_unbounded = false;
  for (const Flow& f : inst.flows()) {
    if (f.deadline) {
      points.insert(*f.deadline);
    } else {
      has_unbounded = true;
    }
  }
  if (has_unbounded) {
    if (!horizon) {
      if (points.empty()) {
        throw Error(ErrorCode::kNoDeadlines,
                    "every flow is Unbounded and no horizon was given");
      }
    } else if (points.empty() || *horizon > *points.rbegin()) {
      points.insert(*horizon);
    }
  }
  std::vector<double> b = {0.0};
  for (double p : points) {
    if (p > b.back()) b.push_back(p);
  }
  if (b.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "no positive slice boundary");
  }
  const size_t target = static_cast<size_t>(multiplier) * inst.flow_count();
  if (multiplier > 1) {
    while (b.size() - 1 < target) {
      size_t longest = 0;
      double best = -1.0;
      for (size_t i = 0; i + 1 < b.size(); ++i) {
        const double len = b[i + 1] - b[i];
        if (len > best * (1.0 + 1e-12)) {
          best = len;
          longest = i;
        }
      }
      b.insert(b.begin() + longest + 1, b[longest] + 0.5 * best);
    }
  }
  return SliceGrid(std::move(b));
}

TsaModel BuildTsa(const Instance& inst, const SliceGrid& grid) {
  const Network& net = inst.network();
  const int F = inst.flow_count();
  const int T = grid.slice_count();
  TsaModel model;
  LpProblem& lp = model.problem.lp;
  std::vector<char> active(F, 1);
  std::vector<std::vector<LpTerm>> size_terms(F);

  for (int t = 0; t < T; ++t) {
    const double len = grid.length(t);
    const int w = lp.AddVariable(len, 0.0, 1.0);
    model.problem.integer_vars.push_back(w);
    model.used_var.push_back(w);
    RateModel slice;
    std::vector<std::vector<LpTerm>> cap_terms;
    AddSliceVariables(inst, lp, model.problem.integer_vars, slice,
                      cap_terms, active, true);
    for (ArcId a = 0; a < net.arc_count(); ++a) {
      if (cap_terms[a].empty()) continue;
      cap_terms[a].push_back({w, -net.arc(a).capacity});
      lp.AddRow(std::move(cap_terms[a]), Relation::kLessEqual, 0.0);
    }
    for (FlowId f = 0; f < F; ++f) {
      const int r = slice.rate_var[f];
      if (r < 0) continue;
      const Flow& flow = inst.flow(f);
      // No rate in slices ending after the deadline.
      if (flow.deadline && grid.end(t) > *flow.deadline + kTimeAbsTol) {
        lp.SetBounds(r, 0.0, 0.0);
        continue;
      }
      size_terms[f].push_back({r, len});
      lp.AddRow({{r, len}, {w, -flow.size}}, Relation::kLessEqual, 0.0);
    }
    if (t > 0) {
      lp.AddRow({{w, 1.0}, {model.used_var[t - 1], -1.0}}, Relation::kLessEqual,
                0.0);
    }
    model.slices.push_back(std::move(slice));
  }
  for (FlowId f = 0; f < F; ++f) {
    lp.AddRow(std::move(size_terms[f]), Relation::kEqual, inst.flow(f).size);
  }
  return model;
}

SolveResult SolveTsaOnGrid(const Instance& inst, const SliceGrid& grid,
                           double time_limit_seconds) {
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  SolveReport& rep = result.report;
  rep.solver = "TSA";
  const TsaModel model = BuildTsa(inst, grid);
  MipOptions opt;
  opt.time_limit_seconds = std::max(0.0, time_limit_seconds - Seconds(start));
  const MipSolution sol = SolveMip(model.problem, opt);
  rep.iterations = sol.nodes;
  switch (sol.status) {
    case MipStatus::kInfeasible:
      rep.status = SolveStatus::kInfeasible;
      rep.detail = "GridOrInstanceInfeasible";
      rep.wall_seconds = Seconds(start);
      return result;
    case MipStatus::kTimeLimitNoIncumbent:
      rep.status = SolveStatus::kTimeLimit;
      rep.lower_bound = sol.best_bound;
      rep.wall_seconds = Seconds(start);
      return result;
    case MipStatus::kOptimal:
      rep.status = SolveStatus::kOptimal;
      break;
    case MipStatus::kFeasible:
      rep.status = SolveStatus::kFeasible;
      break;
  }
  Schedule sched;
  double objective = 0.0;
  for (int t = 0; t < grid.slice_count(); ++t) {
    if (sol.x[model.used_var[t]] < 0.5) continue;
    objective += grid.length(t);
    sched.segments.push_back(
        {ExtractRateVector(inst, model.slices[t], sol.x), grid.length(t)});
  }
  rep.objective = objective;
  rep.lower_bound = std::min(objective, sol.best_bound);
  result.schedule = std::move(sched);
  rep.wall_seconds = Seconds(start);
  return result;
}

SolveResult SolveTsa(const Instance& inst, int multiplier,
                     double time_limit_seconds) {
  const auto start = std::chrono::steady_clock::now();
  std::optional<double> horizon;
  if (!inst.AllDeadlinesBounded()) {
    double sum = 0.0;
    for (FlowId f = 0; f < inst.flow_count(); ++f) {
      sum += EarliestCompletion(inst, f);
    }
    if (std::isfinite(sum)) horizon = sum;
  }
  const double setup = Seconds(start);
  SolveResult result;
  try {
    result = SolveTsaOnGrid(inst, MakeSlices(inst, multiplier, horizon),
                            time_limit_seconds - setup);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoDeadlines) throw;
    // Some flow is unreachable, so no finite horizon exists.
    result.report.solver = "TSA";
    result.report.status = SolveStatus::kInfeasible;
    result.report.detail = "GridOrInstanceInfeasible";
  }
  result.report.solver = "TSA-" + std::to_string(multiplier) + "x";
  result.report.setup_seconds = setup;
  result.report.wall_seconds = Seconds(start);
  return result;
}

bool RtsaFeasible(const Instance& inst, double horizon) {
  const Network& net = inst.network();
  const int F = inst.flow_count();
  LpProblem lp;
  std::vector<int> unused;
  RateModel slice;
  std::vector<std::vector<LpTerm>> cap_terms;
  std::vector<char> active(F, 1);
  const int w = lp.AddVariable(horizon, 0.0, 1.0);
  AddSliceVariables(inst, lp, unused, slice, cap_terms, active, false);
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (cap_terms[a].empty()) continue;
    cap_terms[a].push_back({w, -net.arc(a).capacity});
    lp.AddRow(std::move(cap_terms[a]), Relation::kLessEqual, 0.0);
  }
  for (FlowId f = 0; f < F; ++f) {
    const int r = slice.rate_var[f];
    if (r < 0) return false;
    lp.AddRow({{r, horizon}}, Relation::kEqual, inst.flow(f).size);
    lp.AddRow({{r, horizon}, {w, -inst.flow(f).size}}, Relation::kLessEqual, 0.0);
  }
  return SolveLp(lp).status == LpStatus::kOptimal;
}

double RtsaLowerBound(const Instance& inst, double tol) {
  double hi = 0.0;
  for (FlowId f = 0; f < inst.flow_count(); ++f) {
    const double e = EarliestCompletion(inst, f);
    if (!std::isfinite(e)) {
      throw Error(ErrorCode::kUnreachable,
                  "flow " + std::to_string(inst.external_index()[f]) +
                      " cannot reach its destination");
    }
    hi += e;
  }
  double lo = 0.0;
  if (RtsaFeasible(inst, tol)) return 0.0;
  lo = tol;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (RtsaFeasible(inst, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo;
}

}  // namespace ifdp
