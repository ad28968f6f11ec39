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

#include "ifdp/model.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "ifdp/errors.h"
#include "ifdp/maxflow.h"
#include "ifdp/report.h"

namespace ifdp {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInstance: return "MalformedInstance";
    case ErrorCode::kEmptyFlows: return "EmptyFlows";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kNumericalBreakdown: return "NumericalBreakdown";
    case ErrorCode::kNoDeadlines: return "NoDeadlines";
    case ErrorCode::kUnreachable: return "Unreachable";
    case ErrorCode::kInfeasibleState: return "InfeasibleState";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kPremiseViolated: return "PremiseViolated";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kNeverFeasible: return "NeverFeasible";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal: return "Optimal";
    case SolveStatus::kFeasible: return "Feasible";
    case SolveStatus::kInfeasible: return "Infeasible";
    case SolveStatus::kTimeLimit: return "TimeLimit";
    case SolveStatus::kNoSolution: return "NoSolution";
  }
  return "Unknown";
}

std::string FormatReport(const SolveReport& report) {
  std::ostringstream out;
  out.precision(12);
  out << "solver: " << report.solver << "\n";
  out << "status: " << SolveStatusName(report.status) << "\n";
  out << "objective: ";
  if (report.objective) out << *report.objective; else out << "none";
  out << "\nlower_bound: ";
  if (report.lower_bound) out << *report.lower_bound; else out << "none";
  out << "\niterations: " << report.iterations << "\n";
  out << "wall_seconds: " << report.wall_seconds << "\n";
  if (report.phase1_iterations > 0 || report.columns > 0) {
    out << "phase1_iterations: " << report.phase1_iterations << "\n";
    out << "phase1_seconds: " << report.phase1_seconds << "\n";
    out << "phase2_seconds: " << report.phase2_seconds << "\n";
    out << "columns: " << report.columns << "\n";
  }
  if (report.setup_seconds > 0.0) {
    out << "setup_seconds: " << report.setup_seconds << "\n";
  }
  if (!report.detail.empty()) out << "detail: " << report.detail << "\n";
  return out.str();
}

Network::Network(int node_count, std::vector<Arc> arcs,
                 std::vector<double> units)
    : node_count_(node_count),
      arcs_(std::move(arcs)),
      units_(std::move(units)),
      out_(node_count),
      in_(node_count) {
  for (ArcId a = 0; a < arc_count(); ++a) {
    out_[arcs_[a].tail].push_back(a);
    in_[arcs_[a].head].push_back(a);
  }
}

std::optional<ArcId> Network::FindArc(NodeId tail, NodeId head) const {
  for (ArcId a : out_[tail]) {
    if (arcs_[a].head == head) return a;
  }
  return std::nullopt;
}

int Network::MaxUnitCount(ArcId a, int m) const {
  // A hair of slack so that e.g. 0.3 / 0.1 still yields 3.
  return static_cast<int>(
      std::floor(arcs_[a].capacity / units_[m] * (1.0 + 1e-12)));
}

double Network::UsableCapacity(double capacity) const {
  if (units_.empty() || capacity < units_.front()) return 0.0;
  // Exhaustive over unit counts, largest unit first; unit sets are tiny.
  double best = 0.0;
  const int k = unit_count();
  std::vector<double> sorted(units_.rbegin(), units_.rend());
  auto recurse = [&](auto&& self, int i, double used) -> void {
    if (used > best) best = used;
    if (i == k || best >= capacity) return;
    const int max_count =
        static_cast<int>(std::floor((capacity - used) / sorted[i] + 1e-12));
    for (int c = max_count; c >= 0; --c) {
      self(self, i + 1, used + c * sorted[i]);
      if (best >= capacity) return;
    }
  };
  recurse(recurse, 0, 0.0);
  return std::min(best, capacity);
}

namespace {

bool DeadlineLess(const Deadline& a, const Deadline& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

}  // namespace

std::vector<std::string> DiagnoseInstance(const RawInstance& raw) {
  std::vector<std::string> errs;
  auto add = [&errs](std::string s) { errs.push_back(std::move(s)); };
  if (raw.node_count <= 0) add("node_count must be positive");
  std::set<std::pair<NodeId, NodeId>> seen;
  for (size_t a = 0; a < raw.arcs.size(); ++a) {
    const Arc& arc = raw.arcs[a];
    const std::string where = "arc " + std::to_string(a) + ": ";
    if (arc.tail < 0 || arc.tail >= raw.node_count || arc.head < 0 ||
        arc.head >= raw.node_count) {
      add(where + "node id out of range");
    }
    if (arc.tail == arc.head) add(where + "self-loop");
    if (!std::isfinite(arc.capacity) || arc.capacity < 0.0) {
      add(where + "capacity must be finite and >= 0");
    }
    if (!seen.insert({arc.tail, arc.head}).second) {
      add(where + "duplicate arc (" + std::to_string(arc.tail) + "," +
          std::to_string(arc.head) + ")");
    }
  }
  if (raw.units.empty()) add("units must be nonempty");
  std::set<double> unit_set;
  for (double u : raw.units) {
    if (!std::isfinite(u) || u <= 0.0) add("units must be finite and > 0");
    if (!unit_set.insert(u).second) add("duplicate unit");
  }
  for (size_t f = 0; f < raw.flows.size(); ++f) {
    const Flow& flow = raw.flows[f];
    const std::string where = "flow " + std::to_string(f) + ": ";
    if (flow.origin < 0 || flow.origin >= raw.node_count ||
        flow.destination < 0 || flow.destination >= raw.node_count) {
      add(where + "node id out of range");
    }
    if (flow.origin == flow.destination) add(where + "origin == destination");
    if (!std::isfinite(flow.size) || flow.size <= 0.0) {
      add(where + "size must be > 0");
    }
    if (flow.deadline &&
        (!std::isfinite(*flow.deadline) || *flow.deadline <= 0.0)) {
      add(where + "deadline must be > 0");
    }
  }
  return errs;
}

Instance Instance::Create(const RawInstance& raw) {
  const auto errs = DiagnoseInstance(raw);
  if (!errs.empty()) {
    std::string msg;
    for (const auto& e : errs) msg += (msg.empty() ? "" : "; ") + e;
    throw Error(ErrorCode::kMalformedInstance, msg);
  }
  if (raw.flows.empty()) throw Error(ErrorCode::kEmptyFlows, "no flows");

  Instance inst;
  std::vector<double> units = raw.units;
  std::sort(units.begin(), units.end());
  inst.network_ = Network(raw.node_count, raw.arcs, std::move(units));

  const int count = static_cast<int>(raw.flows.size());
  inst.external_of_.resize(count);
  std::iota(inst.external_of_.begin(), inst.external_of_.end(), 0);
  std::stable_sort(inst.external_of_.begin(), inst.external_of_.end(),
                   [&raw](int a, int b) {
                     return DeadlineLess(raw.flows[a].deadline,
                                         raw.flows[b].deadline);
                   });
  inst.internal_of_.resize(count);
  inst.flows_.reserve(count);
  for (int i = 0; i < count; ++i) {
    inst.internal_of_[inst.external_of_[i]] = i;
    inst.flows_.push_back(raw.flows[inst.external_of_[i]]);
  }
  return inst;
}

Instance ValidateInstance(const RawInstance& raw) { return Instance::Create(raw); }

bool Instance::AllDeadlinesBounded() const {
  return std::all_of(flows_.begin(), flows_.end(),
                     [](const Flow& f) { return f.deadline.has_value(); });
}

double Instance::TotalSize() const {
  double total = 0.0;
  for (const Flow& f : flows_) total += f.size;
  return total;
}

RawInstance Instance::ToRaw() const {
  RawInstance raw;
  raw.node_count = network_.node_count();
  raw.arcs = network_.arcs();
  raw.units = network_.units();
  raw.flows.resize(flows_.size());
  for (size_t i = 0; i < flows_.size(); ++i) {
    raw.flows[external_of_[i]] = flows_[i];
  }
  return raw;
}

int RateVector::FirstPositive() const {
  for (size_t f = 0; f < rates.size(); ++f) {
    if (rates[f] > kPositiveRate) return static_cast<int>(f);
  }
  return -1;
}

std::vector<std::string> CheckRateVector(const Instance& inst,
                                         const RateVector& v,
                                         AllocationMode mode) {
  std::vector<std::string> errs;
  const Network& net = inst.network();
  const int F = inst.flow_count();
  const int A = net.arc_count();
  if (static_cast<int>(v.rates.size()) != F) {
    errs.push_back("rate vector has " + std::to_string(v.rates.size()) +
                   " rates, expected " + std::to_string(F));
    return errs;
  }
  double scale = 1.0;
  for (double r : v.rates) {
    if (r < -kPositiveRate) errs.push_back("negative end-to-end rate");
    scale = std::max(scale, std::abs(r));
  }
  const double tol = 1e-9 * scale;

  std::vector<double> allocated(static_cast<size_t>(F) * A, 0.0);
  std::vector<double> arc_total(A, 0.0);
  for (const UnitAllocation& z : v.allocation) {
    if (z.flow < 0 || z.flow >= F || z.arc < 0 || z.arc >= A || z.unit < 0 ||
        z.unit >= net.unit_count() || z.count < 0) {
      errs.push_back("allocation entry out of range");
      continue;
    }
    const double cap = net.units()[z.unit] * z.count;
    allocated[static_cast<size_t>(z.flow) * A + z.arc] += cap;
    arc_total[z.arc] += cap;
  }
  for (ArcId a = 0; a < A; ++a) {
    // Exact up to one ulp-scale of the capacity.
    if (arc_total[a] > net.arc(a).capacity * (1.0 + 1e-12)) {
      errs.push_back("arc " + std::to_string(a) + " over-allocated: " +
                     std::to_string(arc_total[a]) + " > " +
                     std::to_string(net.arc(a).capacity));
    }
  }

  std::vector<double> balance(static_cast<size_t>(F) * net.node_count(), 0.0);
  std::vector<double> arc_load(A, 0.0);
  for (const ArcRate& y : v.arc_rates) {
    if (y.flow < 0 || y.flow >= F || y.arc < 0 || y.arc >= A) {
      errs.push_back("arc rate entry out of range");
      continue;
    }
    if (y.rate < -tol) errs.push_back("negative arc rate");
    arc_load[y.arc] += y.rate;
    if (mode == AllocationMode::kInteger &&
        y.rate > allocated[static_cast<size_t>(y.flow) * A + y.arc] + tol) {
      errs.push_back("flow " + std::to_string(y.flow) + " exceeds allocation on arc " +
                     std::to_string(y.arc));
    }
    const Arc& arc = net.arc(y.arc);
    balance[static_cast<size_t>(y.flow) * net.node_count() + arc.tail] -= y.rate;
    balance[static_cast<size_t>(y.flow) * net.node_count() + arc.head] += y.rate;
  }
  if (mode == AllocationMode::kContinuous) {
    for (ArcId a = 0; a < A; ++a) {
      if (arc_load[a] > net.arc(a).capacity + tol) {
        errs.push_back("arc " + std::to_string(a) + " overloaded");
      }
    }
  }
  for (FlowId f = 0; f < F; ++f) {
    const Flow& flow = inst.flow(f);
    for (NodeId n = 0; n < net.node_count(); ++n) {
      double expected = 0.0;
      if (n == flow.origin) expected = -v.rates[f];
      if (n == flow.destination) expected = v.rates[f];
      const double got = balance[static_cast<size_t>(f) * net.node_count() + n];
      if (std::abs(got - expected) > tol) {
        errs.push_back("flow " + std::to_string(f) + " not conserved at node " +
                       std::to_string(n));
      }
    }
  }
  return errs;
}

RateVector RealizeAllocation(const Instance& inst,
                             std::vector<UnitAllocation> allocation,
                             std::span<const double> target_rates) {
  const Network& net = inst.network();
  const int F = inst.flow_count();
  const int A = net.arc_count();
  std::vector<double> cap(static_cast<size_t>(F) * A, 0.0);
  for (const UnitAllocation& z : allocation) {
    cap[static_cast<size_t>(z.flow) * A + z.arc] += net.units()[z.unit] * z.count;
  }

  RateVector v;
  v.rates.assign(F, 0.0);
  for (FlowId f = 0; f < F; ++f) {
    const double target = target_rates[f];
    if (target <= kPositiveRate) continue;
    MaxFlowGraph g(net.node_count());
    std::vector<std::pair<int, ArcId>> edges;
    for (ArcId a = 0; a < A; ++a) {
      const double c = cap[static_cast<size_t>(f) * A + a];
      if (c > 0.0) {
        edges.emplace_back(g.AddEdge(net.arc(a).tail, net.arc(a).head, c), a);
      }
    }
    const Flow& flow = inst.flow(f);
    const double got = g.Solve(flow.origin, flow.destination, target);
    if (got <= kPositiveRate) continue;
    v.rates[f] = got;
    for (const auto& [edge, a] : edges) {
      const double y = g.Flow(edge);
      if (y > 0.0) v.arc_rates.push_back({f, a, y});
    }
  }
  // Drop allocations of flows that ended up with zero rate.
  std::erase_if(allocation, [&v](const UnitAllocation& z) {
    return z.count <= 0 || v.rates[z.flow] <= 0.0;
  });
  v.allocation = std::move(allocation);
  return v;
}

double Schedule::Completion() const {
  double t = 0.0;
  for (const Segment& s : segments) t += s.duration;
  return t;
}

ScheduleEvaluation EvaluateSchedule(const Instance& inst,
                                    const Schedule& sched,
                                    AllocationMode mode) {
  const int F = inst.flow_count();
  ScheduleEvaluation ev;
  ev.delivered.assign(F, 0.0);
  ev.finish.assign(F, 0.0);
  double t = 0.0;
  for (size_t k = 0; k < sched.segments.size(); ++k) {
    const Segment& seg = sched.segments[k];
    const auto errs = CheckRateVector(inst, seg.vector, mode);
    for (const auto& e : errs) {
      ev.violations.push_back("VectorInfeasible: segment " + std::to_string(k) +
                              ": " + e);
    }
    if (seg.duration < 0.0) {
      ev.violations.push_back("segment " + std::to_string(k) +
                              ": negative duration");
    }
    t += seg.duration;
    if (static_cast<int>(seg.vector.rates.size()) != F) continue;
    for (FlowId f = 0; f < F; ++f) {
      const double r = seg.vector.rates[f];
      ev.delivered[f] += r * seg.duration;
      if (r > kPositiveRate && seg.duration > 0.0) ev.finish[f] = t;
    }
  }
  ev.completion = t;
  for (FlowId f = 0; f < F; ++f) {
    const Flow& flow = inst.flow(f);
    const int ext = inst.external_index()[f];
    if (std::abs(ev.delivered[f] - flow.size) >
        kDemandRelTol * std::max(1.0, flow.size)) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "flow " << ext << ": delivered " << ev.delivered[f] << " of "
          << flow.size;
      ev.violations.push_back(msg.str());
    }
    if (flow.deadline && ev.finish[f] > *flow.deadline + kTimeAbsTol) {
      std::ostringstream msg;
      msg.precision(12);
      msg << "flow " << ext << ": finishes at " << ev.finish[f]
          << " after deadline " << *flow.deadline;
      ev.violations.push_back(msg.str());
    }
  }
  ev.feasible = ev.violations.empty();
  return ev;
}

}  // namespace ifdp
