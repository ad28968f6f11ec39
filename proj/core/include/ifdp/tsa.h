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

#ifndef IFDP_TSA_H_
#define IFDP_TSA_H_

#include <optional>
#include <vector>

#include "ifdp/flow_formulation.h"
#include "ifdp/mip.h"
#include "ifdp/model.h"
#include "ifdp/report.h"

namespace ifdp {

// Slice boundaries 0 = b_0 < b_1 < ... < b_T.
class SliceGrid {
 public:
  // Throws Error(kInvalidArgument) unless strictly increasing from 0.
  explicit SliceGrid(std::vector<double> boundaries);

  int slice_count() const { return static_cast<int>(boundaries_.size()) - 1; }
  double start(int t) const { return boundaries_[t]; }
  double end(int t) const { return boundaries_[t + 1]; }
  double length(int t) const { return boundaries_[t + 1] - boundaries_[t]; }
  const std::vector<double>& boundaries() const { return boundaries_; }

 private:
  std::vector<double> boundaries_;
};

// 1x: one boundary per distinct deadline (plus `horizon` when some flow is
// Unbounded). 2x/3x: bisect the longest slice, earliest on ties, until
// multiplier * F slices exist. Throws Error(kNoDeadlines) when every flow is
// Unbounded and no horizon is given.
SliceGrid MakeSlices(const Instance& inst, int multiplier,
                     std::optional<double> horizon = std::nullopt);

struct TsaModel {
  MipProblem problem;
  // Per-slice variable maps (their `problem` members are unused).
  std::vector<RateModel> slices;
  std::vector<int> used_var;  // w_t
};

TsaModel BuildTsa(const Instance& inst, const SliceGrid& grid);

SolveResult SolveTsaOnGrid(const Instance& inst, const SliceGrid& grid,
                           double time_limit_seconds = kInfinity);

// Builds the grid with MakeSlices; Unbounded deadlines use the sum of the
// flows' earliest completion times as horizon.
SolveResult SolveTsa(const Instance& inst, int multiplier,
                     double time_limit_seconds = kInfinity);

// Whether the LP relaxation of the single-slice model on [0, T] (deadline
// rows dropped) is feasible.
bool RtsaFeasible(const Instance& inst, double horizon);

// Largest T (within `tol`) whose single-slice relaxation is infeasible;
// a lower bound on the optimal completion time. Throws Error(kUnreachable)
// when some flow cannot reach its destination.
double RtsaLowerBound(const Instance& inst, double tol = 1e-3);

}  // namespace ifdp

#endif  // IFDP_TSA_H_
