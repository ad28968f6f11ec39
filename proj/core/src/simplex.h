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

#ifndef IFDP_SIMPLEX_H_
#define IFDP_SIMPLEX_H_

#include <chrono>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ifdp/lp.h"

namespace ifdp::internal {

// Dense bounded-variable simplex tableau shared by the LP and MIP engines.
//
// Columns are laid out as [structural | slack | artificial]. Every row i
// reads  a_i x + s_i (+ sigma_i art_i) = b_i  with the slack bounded by the
// row relation, so the slack column of row i is e_i and its reduced cost is
// -y_i. The tableau stores B^{-1}[A | b] row-major with an extra rhs column.
class DenseSimplex {
 public:
  enum class Result { kOptimal, kInfeasible, kUnbounded, kCutoff, kIterationLimit };

  DenseSimplex(const LpProblem& problem, const LpOptions& options);

  // Two-phase primal simplex from the slack/artificial basis.
  Result SolvePrimal();

  // Re-solves after bound changes using the dual simplex. The current basis
  // must be dual feasible, which holds after any optimal solve since costs
  // never change. Stops with kCutoff once the objective exceeds `cutoff`.
  Result SolveDual(double cutoff = kInfinity);

  // Replaces bounds of a structural variable. Nonbasic variables move to
  // the side matching the sign of their reduced cost.
  void SetBounds(int var, double lower, double upper);
  double lower(int var) const { return lo_[var]; }
  double upper(int var) const { return hi_[var]; }

  void set_deadline(std::chrono::steady_clock::time_point deadline) {
    deadline_ = deadline;
  }

  int structural_count() const { return n_; }
  int row_count() const { return m_; }
  long iterations() const { return iterations_; }

  double Objective() const;
  std::vector<double> Primal() const;
  std::vector<double> Duals() const;
  std::vector<double> ReducedCosts() const;

  void Dump(std::ostream& out) const;

 private:
  double& T(int row, int col) { return tab_[static_cast<size_t>(row) * width_ + col]; }
  double T(int row, int col) const { return tab_[static_cast<size_t>(row) * width_ + col]; }
  int rhs_col() const { return width_ - 1; }

  void Pivot(int row, int col);
  void Refactor();
  void RecomputeBasics();
  void RecomputeReducedCosts();
  bool IsFixed(int j) const { return hi_[j] - lo_[j] <= 0.0; }
  // Value for a nonbasic column given its side flag.
  double NonbasicValue(int j) const;
  Result PrimalLoop();
  void DriveOutArtificials();
  bool TimeUp() const;

  LpOptions options_;
  int n_ = 0;       // structurals
  int m_ = 0;       // rows
  int ncol_ = 0;    // structurals + slacks + artificials
  int width_ = 0;   // ncol_ + rhs
  std::vector<double> tab_;
  std::vector<double> d_;      // reduced costs
  std::vector<double> cost_;   // active costs (phase I or II)
  std::vector<double> phase2_cost_;
  std::vector<double> lo_, hi_;
  std::vector<double> x_;      // value of every column
  std::vector<char> at_upper_;
  std::vector<int> basis_;     // row -> column
  std::vector<int> row_of_;    // column -> row or -1
  std::vector<int> art_row_;   // artificial column -> row
  // Original matrix with slack/artificial columns, for refactorization.
  std::vector<double> original_;
  long iterations_ = 0;
  long pivots_since_refactor_ = 0;
  long degenerate_ = 0;
  bool bland_ = false;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
};

}  // namespace ifdp::internal

#endif  // IFDP_SIMPLEX_H_
