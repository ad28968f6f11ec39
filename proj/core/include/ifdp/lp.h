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

#ifndef IFDP_LP_H_
#define IFDP_LP_H_

#include <iosfwd>
#include <limits>
#include <utility>
#include <vector>

namespace ifdp {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Relation { kLessEqual, kEqual, kGreaterEqual };

struct LpTerm {
  int var = 0;
  double coef = 0.0;
};

struct LpRow {
  std::vector<LpTerm> terms;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

// min c^T x  s.t.  rows, lower <= x <= upper.
class LpProblem {
 public:
  int AddVariable(double cost, double lower = 0.0, double upper = kInfinity);
  int AddRow(std::vector<LpTerm> terms, Relation relation, double rhs);

  int variable_count() const { return static_cast<int>(cost_.size()); }
  int row_count() const { return static_cast<int>(rows_.size()); }

  const std::vector<double>& cost() const { return cost_; }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  const std::vector<LpRow>& rows() const { return rows_; }
  const LpRow& row(int i) const { return rows_[i]; }

  void SetCost(int var, double cost) { cost_[var] = cost; }
  void SetBounds(int var, double lower, double upper) {
    lower_[var] = lower;
    upper_[var] = upper;
  }
  void SetRhs(int row, double rhs) { rows_[row].rhs = rhs; }

  // Throws Error(kInvalidArgument) on out-of-range indices, non-finite
  // right-hand sides or lower > upper.
  void Validate() const;

 private:
  std::vector<double> cost_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<LpRow> rows_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* LpStatusName(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  double objective = 0.0;
  // y = c_B B^{-1}. For a min problem: <= rows have y <= 0, >= rows y >= 0,
  // = rows are free.
  std::vector<double> duals;
  // c_j - y^T A_j.
  std::vector<double> reduced_costs;
  long iterations = 0;
};

struct LpOptions {
  double feasibility_tol = 1e-8;
  double optimality_tol = 1e-7;
  // Degenerate pivots tolerated before switching to Bland's rule.
  int bland_after = 1000;
  long max_iterations = 5'000'000;
  // Writes the final tableau in plain text when set.
  std::ostream* debug_dump = nullptr;
};

// Two-phase primal simplex on a dense bounded-variable tableau. Throws
// Error(kNumericalBreakdown) when no acceptable pivot survives a
// refactorization.
LpSolution SolveLp(const LpProblem& problem, const LpOptions& options = {});

// b^T y + sum of reduced-cost * bound terms for variables resting at a
// nonzero bound. Equals the objective at an optimum (strong duality).
double DualObjective(const LpProblem& problem, const LpSolution& solution);

}  // namespace ifdp

#endif  // IFDP_LP_H_
