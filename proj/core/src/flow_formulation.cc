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

#include "ifdp/flow_formulation.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "ifdp/errors.h"
#include "ifdp/maxflow.h"

namespace ifdp {
namespace {

// Common step of all end-to-end rates under integer allocation: the gcd of
// the units when they are all integers, 0 otherwise.
long RateStep(const Network& net) {
  long g = 0;
  for (double u : net.units()) {
    const double r = std::round(u);
    if (std::abs(u - r) > 1e-9 || r < 1.0) return 0;
    g = std::gcd(g, static_cast<long>(r));
  }
  return g;
}

}  // namespace

RateModel BuildRateModel(const Instance& inst, std::span<const double> rate_cost,
                         std::span<const char> active, AllocationMode mode) {
  const Network& net = inst.network();
  const int F = inst.flow_count();
  RateModel model;
  model.mode = mode;
  model.rate_var.assign(F, -1);
  LpProblem& lp = model.problem.lp;
  std::vector<std::vector<LpTerm>> arc_cap_terms(net.arc_count());
  const long step = mode == AllocationMode::kInteger ? RateStep(net) : 0;

  for (FlowId f = 0; f < F; ++f) {
    if (!active[f]) continue;
    const Flow& flow = inst.flow(f);
    const auto arcs = RelevantArcs(net, flow.origin, flow.destination);
    if (arcs.empty()) continue;
    const int r = lp.AddVariable(rate_cost[f], 0.0, kInfinity);
    model.rate_var[f] = r;
    if (step > 0) {
      double out_cap = 0.0;
      for (ArcId a : arcs) {
        if (net.arc(a).tail == flow.origin) out_cap += net.arc(a).capacity;
      }
      const int level = lp.AddVariable(0.0, 0.0, std::floor(out_cap / step));
      lp.AddRow({{r, 1.0}, {level, -static_cast<double>(step)}}, Relation::kEqual, 0.0);
      model.problem.integer_vars.push_back(level);
      model.problem.branch_first.push_back(level);
    }

    std::map<NodeId, std::vector<LpTerm>> balance;
    for (ArcId a : arcs) {
      const Arc& arc = net.arc(a);
      const int y = lp.AddVariable(0.0, 0.0, kInfinity);
      model.arc_vars.push_back({f, a, y});
      balance[arc.tail].push_back({y, 1.0});
      balance[arc.head].push_back({y, -1.0});
      if (mode == AllocationMode::kContinuous) {
        arc_cap_terms[a].push_back({y, 1.0});
        continue;
      }
      std::vector<LpTerm> link = {{y, 1.0}};
      for (int m = 0; m < net.unit_count(); ++m) {
        const int max_count = net.MaxUnitCount(a, m);
        if (max_count <= 0) continue;
        const double u = net.units()[m];
        const int z = lp.AddVariable(0.0, 0.0, max_count);
        model.problem.integer_vars.push_back(z);
        model.alloc_vars.push_back({f, a, m, z});
        link.push_back({z, -u});
        arc_cap_terms[a].push_back({z, u});
      }
      lp.AddRow(std::move(link), Relation::kLessEqual, 0.0);
    }
    // out - in = r at the origin, -r at the destination, 0 elsewhere.
    balance[flow.origin].push_back({r, -1.0});
    balance[flow.destination].push_back({r, 1.0});
    for (auto& [node, terms] : balance) {
      lp.AddRow(std::move(terms), Relation::kEqual, 0.0);
    }
  }
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    auto& terms = arc_cap_terms[a];
    if (terms.empty()) continue;
    // A lone allocation variable is already bounded by its unit count.
    if (mode == AllocationMode::kInteger && terms.size() == 1) continue;
    lp.AddRow(std::move(terms), Relation::kLessEqual, net.arc(a).capacity);
  }
  return model;
}

RateVector ExtractRateVector(const Instance& inst, const RateModel& model,
                             std::span<const double> x) {
  const int F = inst.flow_count();
  std::vector<double> target(F, 0.0);
  for (FlowId f = 0; f < F; ++f) {
    if (model.rate_var[f] >= 0) target[f] = std::max(0.0, x[model.rate_var[f]]);
  }

  if (model.mode == AllocationMode::kInteger) {
    std::vector<UnitAllocation> alloc;
    for (const auto& z : model.alloc_vars) {
      const int count = static_cast<int>(std::lround(x[z.var]));
      if (count > 0) alloc.push_back({z.flow, z.arc, z.unit, count});
    }
    return RealizeAllocation(inst, std::move(alloc), target);
  }

  // Continuous: route each flow through its own LP arc rates by max flow,
  // then shrink uniformly if LP noise pushed an arc over capacity.
  const Network& net = inst.network();
  RateVector v;
  v.rates.assign(F, 0.0);
  std::vector<std::vector<std::pair<ArcId, double>>> per_flow(F);
  for (const auto& y : model.arc_vars) {
    const double val = x[y.var];
    if (val > 0.0) per_flow[y.flow].emplace_back(y.arc, val);
  }
  for (FlowId f = 0; f < F; ++f) {
    if (target[f] <= kPositiveRate) continue;
    MaxFlowGraph g(net.node_count());
    std::vector<std::pair<int, ArcId>> edges;
    for (const auto& [a, cap] : per_flow[f]) {
      edges.emplace_back(g.AddEdge(net.arc(a).tail, net.arc(a).head, cap), a);
    }
    const double got = g.Solve(inst.flow(f).origin, inst.flow(f).destination, target[f]);
    if (got <= kPositiveRate) continue;
    v.rates[f] = got;
    for (const auto& [e, a] : edges) {
      const double fl = g.Flow(e);
      if (fl > 0.0) v.arc_rates.push_back({f, a, fl});
    }
  }
  std::vector<double> load(net.arc_count(), 0.0);
  for (const ArcRate& y : v.arc_rates) load[y.arc] += y.rate;
  double scale = 1.0;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (load[a] > net.arc(a).capacity) scale = std::min(scale, net.arc(a).capacity / load[a]);
  }
  if (scale < 1.0) {
    for (double& r : v.rates) r *= scale;
    for (ArcRate& y : v.arc_rates) y.rate *= scale;
  }
  return v;
}

double MaxSingleFlowRate(const Instance& inst, FlowId f, AllocationMode mode) {
  const int F = inst.flow_count();
  std::vector<double> cost(F, 0.0);
  std::vector<char> active(F, 0);
  cost[f] = -1.0;
  active[f] = 1;
  RateModel model = BuildRateModel(inst, cost, active, mode);
  if (model.rate_var[f] < 0) return 0.0;
  const MipSolution sol = SolveMip(model.problem);
  if (sol.status != MipStatus::kOptimal) return 0.0;
  return std::max(0.0, -sol.objective);
}

double EarliestCompletion(const Instance& inst, FlowId f) {
  const double rate = MaxSingleFlowRate(inst, f);
  if (rate <= kPositiveRate) return kInfinity;
  return inst.flow(f).size / rate;
}

}  // namespace ifdp
