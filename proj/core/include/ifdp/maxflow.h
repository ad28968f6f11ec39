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

#ifndef IFDP_MAXFLOW_H_
#define IFDP_MAXFLOW_H_

#include <limits>
#include <vector>

#include "ifdp/model.h"

namespace ifdp {

// Dinic's algorithm on real-valued capacities. Capacities below
// kEpsilon are treated as saturated.
class MaxFlowGraph {
 public:
  static constexpr double kEpsilon = 1e-12;

  explicit MaxFlowGraph(int node_count);

  // Returns the edge handle used by Flow().
  int AddEdge(int from, int to, double capacity);

  double Solve(int source, int sink,
               double limit = std::numeric_limits<double>::infinity());

  double Flow(int edge) const;

 private:
  struct Edge {
    int to;
    double cap;
    double original;
  };

  bool BuildLevels(int source, int sink);
  double Push(int node, int sink, double pushed);

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<size_t> next_;
};

// Arcs that can carry flow from `origin` to `destination`:
// capacity admits at least one unit, the tail is reachable from `origin`,
// `destination` is reachable from the head, and the arc neither enters the
// origin nor leaves the destination. Formulations omit all other arcs.
std::vector<ArcId> RelevantArcs(const Network& net, NodeId origin,
                                NodeId destination);

bool Reachable(const Network& net, NodeId origin, NodeId destination);

}  // namespace ifdp

#endif  // IFDP_MAXFLOW_H_
