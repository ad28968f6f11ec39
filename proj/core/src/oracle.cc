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

#include "ifdp/oracle.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <queue>

#include "ifdp/cga.h"
#include "ifdp/errors.h"
#include "ifdp/flow_formulation.h"
#include "ifdp/maxflow.h"

namespace ifdp {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Slot {
  FlowId flow;
  int unit;
};

// Count vectors over `slots` that fit into `capacity` and leave less than the
// smallest unit unused.
void MaximalFills(const std::vector<Slot>& slots, const std::vector<double>& units,
                  double capacity, std::vector<std::vector<int>>& out) {
  std::vector<int> counts(slots.size(), 0);
  const double smallest = units.front();
  std::function<void(size_t, double)> rec = [&](size_t i, double left) {
    if (i == slots.size()) {
      if (left < smallest - 1e-12) out.push_back(counts);
      return;
    }
    const double u = units[slots[i].unit];
    const int max_count = static_cast<int>(std::floor(left / u + 1e-12));
    for (int k = max_count; k >= 0; --k) {
      counts[i] = k;
      rec(i + 1, left - k * u);
    }
    counts[i] = 0;
  };
  rec(0, capacity);
}

std::vector<long long> Key(const std::vector<double>& rates) {
  std::vector<long long> k;
  for (double r : rates) k.push_back(std::llround(r * 1e9));
  return k;
}

bool OnEveryPath(const Network& net, ArcId skip, NodeId o, NodeId d) {
  std::vector<char> seen(net.node_count(), 0);
  std::queue<NodeId> q;
  q.push(o);
  seen[o] = 1;
  const double smallest = net.units().front();
  while (!q.empty()) {
    const NodeId n = q.front();
    q.pop();
    if (n == d) return false;
    for (ArcId a : net.out_arcs(n)) {
      if (a == skip || net.arc(a).capacity < smallest) continue;
      const NodeId h = net.arc(a).head;
      if (!seen[h]) {
        seen[h] = 1;
        q.push(h);
      }
    }
  }
  return true;
}


struct ArcChoices {
  ArcId arc;
  std::vector<Slot> slots;
  std::vector<std::vector<int>> fills;
};

// Maximal vectors whose support is exactly `support`.
std::vector<RateVector> EnumerateSupport(const Instance& inst,
                                         const std::vector<std::vector<FlowId>>& users,
                                         unsigned support) {
  const Network& net = inst.network();
  const int F = inst.flow_count();
  std::vector<ArcChoices> arcs;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (users[a].empty()) continue;
    ArcChoices c{a, {}, {}};
    for (FlowId f : users[a]) {
      for (int m = 0; m < net.unit_count(); ++m) {
        if (net.MaxUnitCount(a, m) > 0) c.slots.push_back({f, m});
      }
    }
    MaximalFills(c.slots, net.units(), net.arc(a).capacity, c.fills);
    arcs.push_back(std::move(c));
  }

  std::map<std::vector<long long>, RateVector> found;
  std::vector<size_t> pick(arcs.size(), 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i < arcs.size()) {
      for (size_t k = 0; k < arcs[i].fills.size(); ++k) {
        pick[i] = k;
        rec(i + 1);
      }
      return;
    }
    std::vector<UnitAllocation> alloc;
    std::vector<std::vector<std::pair<ArcId, double>>> caps_of(F);
    for (size_t j = 0; j < arcs.size(); ++j) {
      const auto& fill = arcs[j].fills[pick[j]];
      std::map<FlowId, double> per_flow;
      for (size_t s = 0; s < fill.size(); ++s) {
        if (fill[s] == 0) continue;
        const Slot& slot = arcs[j].slots[s];
        alloc.push_back({slot.flow, arcs[j].arc, slot.unit, fill[s]});
        per_flow[slot.flow] += fill[s] * net.units()[slot.unit];
      }
      for (const auto& [f, c] : per_flow) caps_of[f].emplace_back(arcs[j].arc, c);
    }
    std::vector<double> rates(F, 0.0);
    for (FlowId f = 0; f < F; ++f) {
      if (caps_of[f].empty()) continue;
      MaxFlowGraph g(net.node_count());
      for (const auto& [a, c] : caps_of[f]) g.AddEdge(net.arc(a).tail, net.arc(a).head, c);
      rates[f] = g.Solve(inst.flow(f).origin, inst.flow(f).destination);
      if (rates[f] <= kPositiveRate) rates[f] = 0.0;
    }
    for (FlowId f = 0; f < F; ++f) {
      if ((rates[f] > 0.0) != static_cast<bool>(support >> f & 1)) return;
    }
    auto key = Key(rates);
    if (found.count(key)) return;
    found.emplace(std::move(key), RealizeAllocation(inst, std::move(alloc), rates));
  };
  rec(0);

  std::vector<RateVector> all;
  for (auto& [k, v] : found) all.push_back(std::move(v));
  std::vector<RateVector> out;
  for (size_t i = 0; i < all.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < all.size() && !dominated; ++j) {
      if (i == j) continue;
      bool ge = true;
      for (FlowId f = 0; f < F && ge; ++f) {
        ge = all[j].rates[f] >= all[i].rates[f] - 1e-12;
      }
      dominated = ge;
    }
    if (!dominated) out.push_back(all[i]);
  }
  return out;
}

// Lowers rates so that every flow receives exactly its size; segments keep
// their durations.
Schedule TrimToSizes(const Instance& inst, const Schedule& sched) {
  const int F = inst.flow_count();
  std::vector<double> remaining(F);
  for (FlowId f = 0; f < F; ++f) remaining[f] = inst.flow(f).size;
  Schedule out;
  for (const Segment& seg : sched.segments) {
    std::vector<double> rates = seg.vector.rates;
    bool changed = false;
    for (FlowId f = 0; f < F; ++f) {
      const double want = remaining[f] / seg.duration;
      if (rates[f] > want) {
        rates[f] = want <= kPositiveRate ? 0.0 : want;
        changed = true;
      }
      remaining[f] = std::max(0.0, remaining[f] - rates[f] * seg.duration);
    }
    if (std::all_of(rates.begin(), rates.end(), [](double r) { return r == 0.0; })) continue;
    if (!changed) {
      out.segments.push_back(seg);
      continue;
    }
    std::vector<UnitAllocation> alloc;
    for (const UnitAllocation& u : seg.vector.allocation) {
      if (rates[u.flow] > 0.0) alloc.push_back(u);
    }
    out.segments.push_back({RealizeAllocation(inst, std::move(alloc), rates), seg.duration});
  }
  return out;
}
}  // namespace

std::vector<RateVector> EnumerateRateVectors(const Instance& inst,
                                             const EnumerationCaps& caps) {
  const Network& net = inst.network();
  const int F = inst.flow_count();
  int slots_total = 0;
  for (const Arc& a : net.arcs()) {
    slots_total += static_cast<int>(std::floor(a.capacity / net.units().front()));
  }
  if (net.node_count() > caps.max_nodes || F > caps.max_flows ||
      slots_total > caps.max_unit_slots) {
    throw Error(ErrorCode::kTooLarge,
                "instance exceeds enumeration caps (nodes " +
                    std::to_string(net.node_count()) + ", flows " +
                    std::to_string(F) + ", unit slots " +
                    std::to_string(slots_total) + ")");
  }

  std::vector<std::vector<FlowId>> relevant(net.arc_count());
  for (FlowId f = 0; f < F; ++f) {
    for (ArcId a : RelevantArcs(net, inst.flow(f).origin, inst.flow(f).destination)) {
      relevant[a].push_back(f);
    }
  }

  // Maximal vectors per support.
  std::vector<RateVector> out;
  for (unsigned support = 1; support < (1u << F); ++support) {
    std::vector<std::vector<FlowId>> users(net.arc_count());
    for (ArcId a = 0; a < net.arc_count(); ++a) {
      for (FlowId f : relevant[a]) {
        if (support >> f & 1) users[a].push_back(f);
      }
    }
    for (RateVector& v : EnumerateSupport(inst, users, support)) out.push_back(std::move(v));
  }
  return out;
}

SolveResult SolveFullMp(const Instance& inst, const EnumerationCaps& caps) {
  const auto start = Clock::now();
  SolveResult result;
  SolveReport& rep = result.report;
  rep.solver = "oracle";
  std::vector<Column> columns;
  for (RateVector& v : EnumerateRateVectors(inst, caps)) {
    columns.push_back(Column::FromVector(std::move(v)));
  }
  rep.columns = static_cast<long>(columns.size());
  RmpOptions options;
  options.cover_sizes = true;
  const RmpState state = SolveRmp(inst, std::move(columns), options);
  rep.iterations = 1;
  if (!state.feasible) {
    rep.status = SolveStatus::kInfeasible;
    rep.detail = "MasterInfeasible";
  } else {
    rep.status = SolveStatus::kOptimal;
    rep.objective = rep.lower_bound = state.objective;
    result.schedule = TrimToSizes(inst, ConstructSchedule(inst, state).schedule);
  }
  rep.wall_seconds = Seconds(start);
  return result;
}

SolveResult SolveEdfBottleneck(const Instance& inst) {
  const auto start = Clock::now();
  const Network& net = inst.network();
  const int F = inst.flow_count();
  SolveResult result;
  SolveReport& rep = result.report;
  rep.solver = "EDF";

  std::vector<RateVector> alone(F);
  std::vector<double> rate(F, 0.0);
  for (FlowId f = 0; f < F; ++f) {
    std::vector<double> cost(F, 0.0);
    std::vector<char> active(F, 0);
    cost[f] = -1.0;
    active[f] = 1;
    RateModel model = BuildRateModel(inst, cost, active);
    if (model.rate_var[f] < 0) {
      throw Error(ErrorCode::kPremiseViolated,
                  "flow " + std::to_string(inst.external_index()[f]) + " is unreachable");
    }
    const MipSolution sol = SolveMip(model.problem);
    alone[f] = ExtractRateVector(inst, model, sol.x);
    rate[f] = alone[f].rates[f];
  }
  bool premise = false;
  for (ArcId a = 0; a < net.arc_count() && !premise; ++a) {
    const double usable = net.UsableCapacity(net.arc(a).capacity);
    premise = usable > 0.0;
    for (FlowId f = 0; f < F && premise; ++f) {
      const Flow& fl = inst.flow(f);
      premise = OnEveryPath(net, a, fl.origin, fl.destination) &&
                std::abs(rate[f] - usable) <= 1e-9 * (1.0 + usable);
    }
  }
  if (!premise) {
    throw Error(ErrorCode::kPremiseViolated,
                "no arc is a non-redundant bottleneck shared by every flow");
  }
  Schedule sched;
  double clock = 0.0;
  for (FlowId f = 0; f < F; ++f) {
    const double d = inst.flow(f).size / rate[f];
    sched.segments.push_back({alone[f], d});
    clock += d;
    const Deadline& t = inst.flow(f).deadline;
    if (t && clock > *t + kTimeAbsTol) {
      rep.status = SolveStatus::kInfeasible;
      rep.detail = "DeadlineMissed flow " + std::to_string(inst.external_index()[f]);
      rep.wall_seconds = Seconds(start);
      return result;
    }
  }
  rep.status = SolveStatus::kOptimal;
  rep.objective = rep.lower_bound = clock;
  rep.iterations = F;
  result.schedule = std::move(sched);
  rep.wall_seconds = Seconds(start);
  return result;
}

SolveResult ContinuousMode(const Instance& inst, double time_limit_seconds) {
  CgaOptions opt;
  opt.mode = AllocationMode::kContinuous;
  opt.time_limit_seconds = time_limit_seconds;
  SolveResult r = SolveCga(inst, opt);
  r.report.solver = "continuous";
  return r;
}

}  // namespace ifdp
