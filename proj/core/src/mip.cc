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

#include "ifdp/mip.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <string>

#include "ifdp/errors.h"
#include "simplex.h"

namespace ifdp {

const char* MipStatusName(MipStatus status) {
  switch (status) {
    case MipStatus::kOptimal: return "Optimal";
    case MipStatus::kFeasible: return "Feasible";
    case MipStatus::kInfeasible: return "Infeasible";
    case MipStatus::kTimeLimitNoIncumbent: return "TimeLimit";
  }
  return "Unknown";
}

namespace {

using Clock = std::chrono::steady_clock;
using Simplex = internal::DenseSimplex;

struct Node {
  std::vector<double> lo;  // per integer variable
  std::vector<double> hi;
  double bound = -kInfinity;
  long id = 0;
};

struct WorseBound {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.id > b.id;
  }
};

}  // namespace

MipSolution SolveMip(const MipProblem& problem, const MipOptions& options) {
  problem.lp.Validate();
  const auto& ints = problem.integer_vars;
  const int k = static_cast<int>(ints.size());
  for (int v : ints) {
    if (v < 0 || v >= problem.lp.variable_count()) {
      throw Error(ErrorCode::kInvalidArgument, "integer index out of range");
    }
    if (!std::isfinite(problem.lp.lower()[v]) || !std::isfinite(problem.lp.upper()[v])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "integer variable " + std::to_string(v) + " needs finite bounds");
    }
  }

  std::vector<char> first(k, 0);
  for (int v : problem.branch_first) {
    const auto it = std::find(ints.begin(), ints.end(), v);
    if (it == ints.end()) {
      throw Error(ErrorCode::kInvalidArgument, "branch_first entry is not an integer variable");
    }
    first[it - ints.begin()] = 1;
  }

  const auto start = Clock::now();
  const bool timed = std::isfinite(options.time_limit_seconds);
  const auto deadline =
      timed ? start + std::chrono::duration_cast<Clock::duration>(
                          std::chrono::duration<double>(options.time_limit_seconds))
            : Clock::time_point::max();
  auto time_up = [&] { return timed && Clock::now() > deadline; };

  MipSolution out;
  Simplex simplex(problem.lp, options.lp);
  if (timed) simplex.set_deadline(deadline);

  const auto root = simplex.SolvePrimal();
  out.lp_iterations = simplex.iterations();
  if (root == Simplex::Result::kInfeasible) {
    out.status = MipStatus::kInfeasible;
    return out;
  }
  if (root == Simplex::Result::kUnbounded) {
    throw Error(ErrorCode::kInvalidArgument, "MIP relaxation is unbounded");
  }
  if (root == Simplex::Result::kIterationLimit) {
    out.status = MipStatus::kTimeLimitNoIncumbent;
    return out;
  }

  const double tol = options.integrality_tol;
  double incumbent = kInfinity;
  std::vector<double> best_x;
  auto prune_level = [&] {
    return std::isfinite(incumbent) ? incumbent - 1e-9 * (1.0 + std::abs(incumbent))
                                    : kInfinity;
  };

  Node root_node;
  root_node.lo.resize(k);
  root_node.hi.resize(k);
  for (int i = 0; i < k; ++i) {
    root_node.lo[i] = problem.lp.lower()[ints[i]];
    root_node.hi[i] = problem.lp.upper()[ints[i]];
  }

  std::vector<Node> dive;  // depth-first until the first incumbent
  std::priority_queue<Node, std::vector<Node>, WorseBound> open;
  long next_id = 1;
  dive.push_back(std::move(root_node));
  bool root_solved = true;
  bool stopped = false;

  auto global_bound = [&]() {
    double b = incumbent;
    for (const Node& n : dive) b = std::min(b, n.bound);
    if (!open.empty()) b = std::min(b, open.top().bound);
    return b;
  };

  while (!dive.empty() || !open.empty()) {
    if (time_up() || (options.node_limit >= 0 && out.nodes >= options.node_limit)) {
      stopped = true;
      break;
    }
    Node node;
    if (!dive.empty()) {
      node = std::move(dive.back());
      dive.pop_back();
    } else {
      node = open.top();
      open.pop();
    }
    if (node.bound >= prune_level()) continue;
    ++out.nodes;

    Simplex::Result res;
    if (root_solved) {
      root_solved = false;
      res = Simplex::Result::kOptimal;
    } else {
      for (int i = 0; i < k; ++i) {
        const int v = ints[i];
        if (simplex.lower(v) != node.lo[i] || simplex.upper(v) != node.hi[i]) {
          simplex.SetBounds(v, node.lo[i], node.hi[i]);
        }
      }
      res = simplex.SolveDual(std::isfinite(incumbent) ? prune_level() : kInfinity);
    }
    if (res == Simplex::Result::kIterationLimit) {
      // Put the node back so the reported bound stays valid.
      open.push(std::move(node));
      stopped = true;
      break;
    }

    if (res == Simplex::Result::kOptimal) {
      const double obj = simplex.Objective();
      if (obj < prune_level()) {
        const auto x = simplex.Primal();
        int branch = -1;
        double best_frac = 0.0;
        for (int i = 0; i < k; ++i) {
          const double v = x[ints[i]];
          const double frac = std::abs(v - std::round(v));
          if (frac <= tol) continue;
          const bool better = branch < 0 || first[i] > first[branch] ||
                              (first[i] == first[branch] && frac > best_frac + 1e-12);
          if (better) {
            best_frac = frac;
            branch = i;
          }
        }
        if (branch < 0) {
          incumbent = obj;
          best_x = x;
          for (int v : ints) best_x[v] = std::round(best_x[v]);
          if (!dive.empty()) {
            for (Node& n : dive) open.push(std::move(n));
            dive.clear();
          }
        } else {
          const double v = x[ints[branch]];
          Node down = node;
          Node up = std::move(node);
          down.hi[branch] = std::floor(v);
          up.lo[branch] = std::ceil(v);
          down.bound = up.bound = obj;
          down.id = next_id++;
          up.id = next_id++;
          if (!std::isfinite(incumbent)) {
            // Explore the nearer side first.
            if (v - std::floor(v) >= 0.5) {
              dive.push_back(std::move(down));
              dive.push_back(std::move(up));
            } else {
              dive.push_back(std::move(up));
              dive.push_back(std::move(down));
            }
          } else {
            open.push(std::move(down));
            open.push(std::move(up));
          }
        }
      }
    }
    if (options.record_bound_trace) out.bound_trace.push_back(global_bound());
    if (options.early_exit_below && incumbent < *options.early_exit_below) {
      stopped = !dive.empty() || !open.empty();
      break;
    }
  }

  out.lp_iterations = simplex.iterations();
  out.objective = incumbent;
  out.x = best_x;
  out.best_bound = stopped ? global_bound() : incumbent;
  if (!std::isfinite(incumbent)) {
    out.status = stopped ? MipStatus::kTimeLimitNoIncumbent : MipStatus::kInfeasible;
    if (!stopped) out.best_bound = kInfinity;
  } else {
    out.status = stopped ? MipStatus::kFeasible : MipStatus::kOptimal;
  }
  return out;
}

}  // namespace ifdp
