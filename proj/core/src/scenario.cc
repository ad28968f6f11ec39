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

#include "ifdp/scenario.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "ifdp/cga.h"
#include "ifdp/errors.h"
#include "ifdp/flow_formulation.h"

namespace ifdp {
namespace {

constexpr double kAlphaMax = 4.0;
constexpr double kAlphaTol = 0.05;

std::vector<std::pair<int, int>> Ring(int n) {
  std::vector<std::pair<int, int>> links;
  for (int i = 0; i < n; ++i) links.emplace_back(i, (i + 1) % n);
  return links;
}

void AddBidirectional(RawInstance& raw, int a, int b, double cap) {
  raw.arcs.push_back({a, b, cap});
  raw.arcs.push_back({b, a, cap});
}

bool Phase1Feasible(const Instance& inst) {
  return Phase1(inst).feasible;
}

}  // namespace

std::string TopologyName(Topology t) {
  switch (t) {
    case Topology::kSmall: return "small";
    case Topology::kSoftlayer: return "softlayer";
    case Topology::kGeant: return "geant";
    case Topology::kTriangle: return "triangle";
    case Topology::kStar: return "star";
    case Topology::kCustom: return "custom";
  }
  return "?";
}

Topology ParseTopology(const std::string& name) {
  for (Topology t : {Topology::kSmall, Topology::kSoftlayer, Topology::kGeant,
                     Topology::kTriangle, Topology::kStar, Topology::kCustom}) {
    if (TopologyName(t) == name) return t;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown topology '" + name + "'");
}

std::vector<std::pair<int, int>> TopologyLinks(Topology t, int* node_count) {
  std::vector<std::pair<int, int>> links;
  switch (t) {
    case Topology::kSmall:
      *node_count = 6;
      links = Ring(6);
      links.insert(links.end(), {{0, 3}, {1, 4}});
      break;
    case Topology::kSoftlayer:
      *node_count = 11;
      links = Ring(11);
      links.insert(links.end(), {{0, 5}, {1, 7}, {2, 9}, {3, 6}, {4, 8}, {6, 10}});
      break;
    case Topology::kGeant:
      *node_count = 22;
      links = Ring(22);
      links.insert(links.end(), {{0, 11}, {1, 5}, {2, 8}, {3, 14}, {4, 19},
                                 {6, 12}, {7, 17}, {9, 15}, {10, 20}, {13, 18},
                                 {16, 21}, {2, 18}, {5, 9}, {12, 20}});
      break;
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  "topology " + TopologyName(t) + " has no link list");
  }
  return links;
}

RawInstance GenerateFlows(const Scenario& sc) {
  if (sc.flow_count <= 0 || !(sc.size_min > 0.0) || sc.size_max < sc.size_min) {
    throw Error(ErrorCode::kInvalidArgument, "invalid scenario parameters");
  }
  RawInstance raw;
  switch (sc.topology) {
    case Topology::kTriangle: return Fig1Instance().ToRaw();
    case Topology::kStar: return StarInstance().ToRaw();
    case Topology::kCustom:
      if (!sc.custom_network) {
        throw Error(ErrorCode::kInvalidArgument, "custom topology needs a network");
      }
      raw = *sc.custom_network;
      raw.flows.clear();
      break;
    default: {
      int n = 0;
      for (const auto& [a, b] : TopologyLinks(sc.topology, &n)) {
        AddBidirectional(raw, a, b, sc.capacity);
      }
      raw.node_count = n;
      raw.units = sc.units;
    }
  }
  std::mt19937_64 rng(sc.seed);
  std::uniform_int_distribution<int> node(0, raw.node_count - 1);
  std::uniform_real_distribution<double> size(sc.size_min, sc.size_max);
  // Probe instance used only for reachability of sampled pairs.
  RawInstance probe = raw;
  for (int f = 0; f < sc.flow_count; ++f) {
    Flow flow;
    bool ok = false;
    for (int attempt = 0; attempt < 100 && !ok; ++attempt) {
      flow.origin = node(rng);
      do {
        flow.destination = node(rng);
      } while (flow.destination == flow.origin);
      flow.size = size(rng);
      probe.flows = {flow};
      ok = MaxSingleFlowRate(Instance::Create(probe), 0) > kPositiveRate;
    }
    if (!ok) {
      throw Error(ErrorCode::kDisconnected,
                  "no connected origin/destination pair after 100 draws");
    }
    raw.flows.push_back(flow);
  }
  return raw;
}

Instance WithDeadlineFactor(const RawInstance& raw, double alpha) {
  RawInstance out = raw;
  for (Flow& f : out.flows) f.deadline.reset();
  const Instance plain = Instance::Create(out);
  for (FlowId f = 0; f < plain.flow_count(); ++f) {
    const double e = EarliestCompletion(plain, f);
    if (!std::isfinite(e)) {
      throw Error(ErrorCode::kDisconnected,
                  "flow " + std::to_string(plain.external_index()[f]) + " is unreachable");
    }
    out.flows[plain.external_index()[f]].deadline = alpha * e;
  }
  return Instance::Create(out);
}

double TightAlpha(const Scenario& sc) {
  const RawInstance raw = GenerateFlows(sc);
  auto feasible = [&](double alpha) {
    return Phase1Feasible(WithDeadlineFactor(raw, alpha));
  };
  if (!feasible(kAlphaMax)) {
    throw Error(ErrorCode::kNeverFeasible, "infeasible at deadline factor 4");
  }
  double lo = 0.0, hi = kAlphaMax;
  while (hi - lo > kAlphaTol) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? hi : lo) = mid;
  }
  return hi;
}

Instance GenerateInstance(const Scenario& sc) {
  if (sc.topology == Topology::kTriangle) return Fig1Instance();
  if (sc.topology == Topology::kStar) return StarInstance();
  double alpha = sc.alpha;
  if (sc.deadline_mode == DeadlineMode::kTight) alpha = TightAlpha(sc);
  if (sc.deadline_mode == DeadlineMode::kModerate) alpha = 1.3 * TightAlpha(sc);
  if (!(alpha > 0.0)) throw Error(ErrorCode::kInvalidArgument, "alpha must be positive");
  return WithDeadlineFactor(GenerateFlows(sc), alpha);
}

Instance Fig1Instance() {
  RawInstance raw;
  raw.node_count = 3;
  raw.arcs = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}};
  raw.units = {1.0};
  raw.flows = {{0, 2, 0.5, 1.0}, {1, 0, 1.5, 2.0}, {2, 1, 1.0, 3.0}};
  return Instance::Create(raw);
}

Instance StarInstance() {
  RawInstance raw;
  raw.node_count = 5;
  raw.arcs = {{0, 3, 1.0}, {1, 3, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}};
  raw.units = {1.0};
  raw.flows = {{0, 4, 1.0, 1.0}, {1, 4, 1.0, 2.0}, {2, 4, 1.0, 3.0}, {1, 3, 2.0, 3.0}};
  return Instance::Create(raw);
}

Instance GenerateTinyInstance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  auto real = [&](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  while (true) {
    RawInstance raw;
    raw.node_count = uniform(3, 5);
    raw.units = uniform(0, 2) == 0 ? std::vector<double>{1.0, 2.0} : std::vector<double>{1.0};
    int slots = 0;
    for (int i = 0; i < raw.node_count; ++i) {
      for (int j = 0; j < raw.node_count; ++j) {
        if (i == j || real(0.0, 1.0) > 0.45) continue;
        const double cap = uniform(1, 3) - (uniform(0, 4) == 0 ? 0.5 : 0.0);
        if (slots + static_cast<int>(cap) > 10) continue;
        slots += static_cast<int>(cap);
        raw.arcs.push_back({i, j, cap});
      }
    }
    const int F = uniform(2, 4);
    for (int f = 0; f < F; ++f) {
      const int o = uniform(0, raw.node_count - 1);
      int d = uniform(0, raw.node_count - 2);
      if (d >= o) ++d;
      raw.flows.push_back({o, d, std::round(real(0.5, 3.0) * 4.0) / 4.0, std::nullopt});
    }
    const Instance plain = Instance::Create(raw);
    bool reachable = true;
    std::vector<double> e(F);
    for (FlowId f = 0; f < F && reachable; ++f) {
      e[f] = EarliestCompletion(plain, f);
      reachable = std::isfinite(e[f]);
    }
    if (!reachable) continue;
    double total = 0.0;
    for (double v : e) total += v;
    for (FlowId f = 0; f < F; ++f) {
      const int ext = plain.external_index()[f];
      if (uniform(0, 4) == 0) continue;  // Unbounded
      raw.flows[ext].deadline = e[f] + real(0.0, 1.0) * (total - e[f]) + 1e-3;
    }
    return Instance::Create(raw);
  }
}

Instance GenerateBottleneckInstance(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  // Origins 0..2 feed hub 3, which reaches sink 4 over the shared arc.
  RawInstance raw;
  raw.node_count = 5;
  raw.units = {1.0};
  const double c = uniform(1, 2);
  for (int o = 0; o < 3; ++o) raw.arcs.push_back({o, 3, c + uniform(0, 1)});
  raw.arcs.push_back({3, 4, c});
  const int F = uniform(2, 4);
  double clock = 0.0;
  for (int f = 0; f < F; ++f) {
    const double size = uniform(1, 8) * 0.5;
    clock += size / c;
    // Deadlines near the sequential finish times; some are missed.
    const double slack = 0.5 * uniform(-1, 4);
    raw.flows.push_back({uniform(0, 2), 4, size, std::max(0.25, clock + slack)});
  }
  std::shuffle(raw.flows.begin(), raw.flows.end(), rng);
  return Instance::Create(raw);
}

}  // namespace ifdp
