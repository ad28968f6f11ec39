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

#include "ifdp/maxflow.h"

#include <algorithm>
#include <queue>

namespace ifdp {

MaxFlowGraph::MaxFlowGraph(int node_count)
    : n_(node_count), adj_(node_count), level_(node_count), next_(node_count) {}

int MaxFlowGraph::AddEdge(int from, int to, double capacity) {
  const int id = static_cast<int>(edges_.size());
  edges_.push_back({to, capacity, capacity});
  adj_[from].push_back(id);
  edges_.push_back({from, 0.0, 0.0});
  adj_[to].push_back(id + 1);
  return id;
}

double MaxFlowGraph::Flow(int edge) const {
  return edges_[edge].original - edges_[edge].cap;
}

bool MaxFlowGraph::BuildLevels(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> q;
  level_[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int e : adj_[u]) {
      const Edge& edge = edges_[e];
      if (edge.cap > kEpsilon && level_[edge.to] < 0) {
        level_[edge.to] = level_[u] + 1;
        q.push(edge.to);
      }
    }
  }
  return level_[sink] >= 0;
}

double MaxFlowGraph::Push(int node, int sink, double pushed) {
  if (node == sink) return pushed;
  for (size_t& i = next_[node]; i < adj_[node].size(); ++i) {
    const int e = adj_[node][i];
    Edge& edge = edges_[e];
    if (edge.cap <= kEpsilon || level_[edge.to] != level_[node] + 1) continue;
    const double got = Push(edge.to, sink, std::min(pushed, edge.cap));
    if (got > kEpsilon) {
      edge.cap -= got;
      edges_[e ^ 1].cap += got;
      return got;
    }
  }
  return 0.0;
}

double MaxFlowGraph::Solve(int source, int sink, double limit) {
  if (source == sink) return 0.0;
  double total = 0.0;
  while (total < limit && BuildLevels(source, sink)) {
    std::fill(next_.begin(), next_.end(), 0);
    while (total < limit) {
      const double got = Push(source, sink, limit - total);
      if (got <= kEpsilon) break;
      total += got;
    }
  }
  return total;
}

namespace {

std::vector<char> Reach(const Network& net, NodeId start, bool forward) {
  std::vector<char> seen(net.node_count(), 0);
  std::vector<NodeId> stack = {start};
  seen[start] = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    const auto& arcs = forward ? net.out_arcs(u) : net.in_arcs(u);
    for (ArcId a : arcs) {
      if (net.arc(a).capacity < net.units().front()) continue;
      const NodeId v = forward ? net.arc(a).head : net.arc(a).tail;
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<ArcId> RelevantArcs(const Network& net, NodeId origin,
                                NodeId destination) {
  const auto from_origin = Reach(net, origin, true);
  const auto to_destination = Reach(net, destination, false);
  std::vector<ArcId> out;
  if (!from_origin[destination]) return out;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arc(a);
    if (arc.capacity < net.units().front()) continue;
    if (arc.head == origin || arc.tail == destination) continue;
    if (from_origin[arc.tail] && to_destination[arc.head]) out.push_back(a);
  }
  return out;
}

bool Reachable(const Network& net, NodeId origin, NodeId destination) {
  return Reach(net, origin, true)[destination];
}

}  // namespace ifdp
