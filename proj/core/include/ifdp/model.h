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

#ifndef IFDP_MODEL_H_
#define IFDP_MODEL_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ifdp {

// Tolerances shared by every solver and by the schedule checker.
inline constexpr double kDemandRelTol = 1e-6;
inline constexpr double kTimeAbsTol = 1e-9;
inline constexpr double kPositiveRate = 1e-9;

using NodeId = int;
using ArcId = int;
using FlowId = int;

// Absent deadline means Unbounded.
using Deadline = std::optional<double>;

struct Arc {
  NodeId tail = 0;
  NodeId head = 0;
  double capacity = 0.0;

  bool operator==(const Arc&) const = default;
};

struct Flow {
  NodeId origin = 0;
  NodeId destination = 0;
  double size = 0.0;
  Deadline deadline;

  bool operator==(const Flow&) const = default;
};

// Unvalidated instance data as it comes from a file, a generator or a test.
struct RawInstance {
  int node_count = 0;
  std::vector<Arc> arcs;
  std::vector<double> units;
  std::vector<Flow> flows;
};

class Network {
 public:
  Network() = default;
  Network(int node_count, std::vector<Arc> arcs, std::vector<double> units);

  int node_count() const { return node_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(ArcId a) const { return arcs_[a]; }
  // Sorted ascending, strictly positive, no duplicates.
  const std::vector<double>& units() const { return units_; }
  int unit_count() const { return static_cast<int>(units_.size()); }

  const std::vector<ArcId>& out_arcs(NodeId n) const { return out_[n]; }
  const std::vector<ArcId>& in_arcs(NodeId n) const { return in_[n]; }
  std::optional<ArcId> FindArc(NodeId tail, NodeId head) const;

  // Largest count z with units()[m] * z <= capacity of arc a.
  int MaxUnitCount(ArcId a, int m) const;

  // Largest capacity reachable as a nonnegative integer combination of units
  // without exceeding `capacity`.
  double UsableCapacity(double capacity) const;

  bool operator==(const Network& other) const {
    return node_count_ == other.node_count_ && arcs_ == other.arcs_ &&
           units_ == other.units_;
  }

 private:
  int node_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<double> units_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
};

// A validated instance. Flows are held in internal order, ascending by
// deadline (Unbounded last, ties by input order); the permutation back to
// the caller's order is kept so files round-trip in external order.
class Instance {
 public:
  // Throws Error(kMalformedInstance) listing every violated invariant, or
  // Error(kEmptyFlows).
  static Instance Create(const RawInstance& raw);

  const Network& network() const { return network_; }
  int flow_count() const { return static_cast<int>(flows_.size()); }
  const std::vector<Flow>& flows() const { return flows_; }
  const Flow& flow(FlowId f) const { return flows_[f]; }

  // internal_index()[external] -> internal; external_index()[internal] ->
  // external.
  const std::vector<int>& internal_index() const { return internal_of_; }
  const std::vector<int>& external_index() const { return external_of_; }

  bool AllDeadlinesBounded() const;
  double TotalSize() const;

  // Flows in the caller's original order.
  RawInstance ToRaw() const;

  bool operator==(const Instance& other) const {
    return network_ == other.network_ && flows_ == other.flows_ &&
           internal_of_ == other.internal_of_;
  }

 private:
  Network network_;
  std::vector<Flow> flows_;
  std::vector<int> internal_of_;
  std::vector<int> external_of_;
};

// Returns the list of violated invariants of `raw`; empty when valid.
std::vector<std::string> DiagnoseInstance(const RawInstance& raw);

// Same as Instance::Create.
Instance ValidateInstance(const RawInstance& raw);

// Units of type `unit` allocated to `flow` on `arc`.
struct UnitAllocation {
  FlowId flow = 0;
  ArcId arc = 0;
  int unit = 0;
  int count = 0;

  bool operator==(const UnitAllocation&) const = default;
};

struct ArcRate {
  FlowId flow = 0;
  ArcId arc = 0;
  double rate = 0.0;

  bool operator==(const ArcRate&) const = default;
};

// End-to-end rates of all flows together with an integer capacity
// allocation that realizes them. Indices are internal flow indices.
struct RateVector {
  std::vector<double> rates;
  std::vector<UnitAllocation> allocation;
  std::vector<ArcRate> arc_rates;

  // Smallest flow index with a positive rate, or -1 if all rates are zero.
  int FirstPositive() const;
  bool IsZero() const { return FirstPositive() < 0; }
};

// kContinuous drops the integer-unit allocation and only requires the arc
// rates of all flows to fit the arc capacity.
enum class AllocationMode { kInteger, kContinuous };

// Checks flow conservation, allocation cover of arc rates, and arc capacity.
std::vector<std::string> CheckRateVector(
    const Instance& inst, const RateVector& v,
    AllocationMode mode = AllocationMode::kInteger);

// Builds a rate vector from an integer allocation. Each flow's rate is the
// smaller of target_rates[f] and the max flow it can push through its own
// allocated capacity; arc rates come from that max flow.
RateVector RealizeAllocation(const Instance& inst,
                             std::vector<UnitAllocation> allocation,
                             std::span<const double> target_rates);

struct Segment {
  RateVector vector;
  double duration = 0.0;
};

struct Schedule {
  std::vector<Segment> segments;

  double Completion() const;
};

struct ScheduleEvaluation {
  double completion = 0.0;
  std::vector<double> delivered;
  // End of the last segment in which the flow has positive rate; 0 when the
  // flow is never served.
  std::vector<double> finish;
  bool feasible = false;
  std::vector<std::string> violations;
};

ScheduleEvaluation EvaluateSchedule(
    const Instance& inst, const Schedule& sched,
    AllocationMode mode = AllocationMode::kInteger);

}  // namespace ifdp

#endif  // IFDP_MODEL_H_
