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

#include "ifdp/lp.h"

#include <cmath>
#include <string>

#include "ifdp/errors.h"
#include "simplex.h"

namespace ifdp {

int LpProblem::AddVariable(double cost, double lower, double upper) {
  cost_.push_back(cost);
  lower_.push_back(lower);
  upper_.push_back(upper);
  return static_cast<int>(cost_.size()) - 1;
}

int LpProblem::AddRow(std::vector<LpTerm> terms, Relation relation, double rhs) {
  rows_.push_back({std::move(terms), relation, rhs});
  return static_cast<int>(rows_.size()) - 1;
}

void LpProblem::Validate() const {
  const int n = variable_count();
  for (int j = 0; j < n; ++j) {
    if (std::isnan(lower_[j]) || std::isnan(upper_[j]) || lower_[j] > upper_[j] ||
        lower_[j] == kInfinity || upper_[j] == -kInfinity) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable " + std::to_string(j) + " has invalid bounds");
    }
    if (!std::isfinite(cost_[j])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable " + std::to_string(j) + " has non-finite cost");
    }
  }
  for (int i = 0; i < row_count(); ++i) {
    if (!std::isfinite(rows_[i].rhs)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "row " + std::to_string(i) + " has non-finite rhs");
    }
    for (const LpTerm& t : rows_[i].terms) {
      if (t.var < 0 || t.var >= n || !std::isfinite(t.coef)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "row " + std::to_string(i) + " has an invalid term");
      }
    }
  }
}

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "Optimal";
    case LpStatus::kInfeasible: return "Infeasible";
    case LpStatus::kUnbounded: return "Unbounded";
  }
  return "Unknown";
}

LpSolution SolveLp(const LpProblem& problem, const LpOptions& options) {
  problem.Validate();
  LpSolution sol;
  sol.duals.assign(problem.row_count(), 0.0);

  // Empty rows are dropped after checking 0 (rel) rhs.
  LpProblem reduced;
  std::vector<int> kept;
  for (int j = 0; j < problem.variable_count(); ++j) {
    reduced.AddVariable(problem.cost()[j], problem.lower()[j], problem.upper()[j]);
  }
  for (int i = 0; i < problem.row_count(); ++i) {
    const LpRow& row = problem.row(i);
    bool empty = true;
    for (const LpTerm& t : row.terms) {
      if (t.coef != 0.0) {
        empty = false;
        break;
      }
    }
    if (empty) {
      const double tol = options.feasibility_tol;
      const bool ok = (row.relation == Relation::kLessEqual && row.rhs >= -tol) ||
                      (row.relation == Relation::kGreaterEqual && row.rhs <= tol) ||
                      (row.relation == Relation::kEqual && std::abs(row.rhs) <= tol);
      if (!ok) {
        sol.status = LpStatus::kInfeasible;
        return sol;
      }
      continue;
    }
    kept.push_back(i);
    reduced.AddRow(row.terms, row.relation, row.rhs);
  }

  internal::DenseSimplex simplex(reduced, options);
  const auto result = simplex.SolvePrimal();
  sol.iterations = simplex.iterations();
  if (options.debug_dump) simplex.Dump(*options.debug_dump);
  switch (result) {
    case internal::DenseSimplex::Result::kInfeasible:
      sol.status = LpStatus::kInfeasible;
      return sol;
    case internal::DenseSimplex::Result::kUnbounded:
      sol.status = LpStatus::kUnbounded;
      return sol;
    case internal::DenseSimplex::Result::kOptimal:
      break;
    default:
      throw Error(ErrorCode::kNumericalBreakdown, "simplex iteration limit reached");
  }
  sol.status = LpStatus::kOptimal;
  sol.x = simplex.Primal();
  sol.objective = simplex.Objective();
  sol.reduced_costs = simplex.ReducedCosts();
  const auto y = simplex.Duals();
  for (size_t k = 0; k < kept.size(); ++k) sol.duals[kept[k]] = y[k];
  return sol;
}

double DualObjective(const LpProblem& problem, const LpSolution& solution) {
  double obj = 0.0;
  for (int i = 0; i < problem.row_count(); ++i) {
    obj += problem.row(i).rhs * solution.duals[i];
  }
  for (int j = 0; j < problem.variable_count(); ++j) {
    obj += solution.reduced_costs[j] * solution.x[j];
  }
  return obj;
}

}  // namespace ifdp
