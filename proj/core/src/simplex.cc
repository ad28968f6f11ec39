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

#include "simplex.h"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "ifdp/errors.h"

namespace ifdp::internal {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kBreakdownTol = 1e-11;
constexpr double kDropTol = 1e-14;

}  // namespace

DenseSimplex::DenseSimplex(const LpProblem& problem, const LpOptions& options)
    : options_(options), n_(problem.variable_count()), m_(problem.row_count()) {
  // Structural starting values: a finite bound, else zero.
  std::vector<double> xs(n_);
  std::vector<char> xs_upper(n_, 0);
  for (int j = 0; j < n_; ++j) {
    const double lo = problem.lower()[j];
    const double hi = problem.upper()[j];
    if (std::isfinite(lo)) {
      xs[j] = lo;
    } else if (std::isfinite(hi)) {
      xs[j] = hi;
      xs_upper[j] = 1;
    } else {
      xs[j] = 0.0;
    }
  }

  std::vector<double> slack_lo(m_), slack_hi(m_), slack_x(m_);
  std::vector<char> slack_upper(m_, 0);
  std::vector<int> art_sign(m_, 0);
  std::vector<double> art_x(m_, 0.0);
  int arts = 0;
  for (int i = 0; i < m_; ++i) {
    const LpRow& row = problem.row(i);
    double residual = row.rhs;
    for (const LpTerm& t : row.terms) residual -= t.coef * xs[t.var];
    switch (row.relation) {
      case Relation::kLessEqual:
        slack_lo[i] = 0.0;
        slack_hi[i] = kInfinity;
        break;
      case Relation::kGreaterEqual:
        slack_lo[i] = -kInfinity;
        slack_hi[i] = 0.0;
        break;
      case Relation::kEqual:
        slack_lo[i] = 0.0;
        slack_hi[i] = 0.0;
        break;
    }
    const double clamped = std::clamp(residual, slack_lo[i], slack_hi[i]);
    slack_x[i] = clamped;
    slack_upper[i] = (clamped == slack_hi[i] && clamped != slack_lo[i]);
    const double gap = residual - clamped;
    if (std::abs(gap) > 0.0) {
      art_sign[i] = gap > 0 ? 1 : -1;
      art_x[i] = std::abs(gap);
      ++arts;
    }
  }

  ncol_ = n_ + m_ + arts;
  width_ = ncol_ + 1;
  original_.assign(static_cast<size_t>(m_) * width_, 0.0);
  lo_.assign(ncol_, 0.0);
  hi_.assign(ncol_, 0.0);
  x_.assign(ncol_, 0.0);
  at_upper_.assign(ncol_, 0);
  cost_.assign(ncol_, 0.0);
  phase2_cost_.assign(ncol_, 0.0);
  basis_.assign(m_, -1);
  row_of_.assign(ncol_, -1);
  art_row_.clear();

  for (int j = 0; j < n_; ++j) {
    lo_[j] = problem.lower()[j];
    hi_[j] = problem.upper()[j];
    x_[j] = xs[j];
    at_upper_[j] = xs_upper[j];
    phase2_cost_[j] = problem.cost()[j];
  }
  int next_art = n_ + m_;
  for (int i = 0; i < m_; ++i) {
    double* row = &original_[static_cast<size_t>(i) * width_];
    for (const LpTerm& t : problem.row(i).terms) row[t.var] += t.coef;
    row[n_ + i] = 1.0;
    row[ncol_] = problem.row(i).rhs;
    const int s = n_ + i;
    lo_[s] = slack_lo[i];
    hi_[s] = slack_hi[i];
    x_[s] = slack_x[i];
    at_upper_[s] = slack_upper[i];
    if (art_sign[i] != 0) {
      const int a = next_art++;
      row[a] = art_sign[i];
      lo_[a] = 0.0;
      hi_[a] = kInfinity;
      x_[a] = art_x[i];
      cost_[a] = 1.0;
      basis_[i] = a;
      art_row_.push_back(i);
    } else {
      basis_[i] = s;
    }
  }
  for (int i = 0; i < m_; ++i) row_of_[basis_[i]] = i;
  Refactor();
}

bool DenseSimplex::TimeUp() const {
  return deadline_ && (iterations_ & 31) == 0 &&
         std::chrono::steady_clock::now() > *deadline_;
}

double DenseSimplex::NonbasicValue(int j) const {
  if (at_upper_[j] && std::isfinite(hi_[j])) return hi_[j];
  if (std::isfinite(lo_[j])) return lo_[j];
  if (std::isfinite(hi_[j])) return hi_[j];
  return 0.0;
}

void DenseSimplex::Pivot(int r, int q) {
  double* prow = &tab_[static_cast<size_t>(r) * width_];
  const double inv = 1.0 / prow[q];
  std::vector<int> nz;
  nz.reserve(width_);
  for (int j = 0; j < width_; ++j) {
    if (prow[j] != 0.0) {
      prow[j] *= inv;
      if (std::abs(prow[j]) < kDropTol) {
        prow[j] = 0.0;
      } else {
        nz.push_back(j);
      }
    }
  }
  prow[q] = 1.0;
  for (int i = 0; i < m_; ++i) {
    if (i == r) continue;
    double* row = &tab_[static_cast<size_t>(i) * width_];
    const double f = row[q];
    if (f == 0.0) continue;
    for (int j : nz) {
      double v = row[j] - f * prow[j];
      row[j] = std::abs(v) < kDropTol ? 0.0 : v;
    }
    row[q] = 0.0;
  }
  const double dq = d_[q];
  if (dq != 0.0) {
    for (int j : nz) {
      if (j < ncol_) d_[j] -= dq * prow[j];
    }
    d_[q] = 0.0;
  }
  const int leaving = basis_[r];
  row_of_[leaving] = -1;
  basis_[r] = q;
  row_of_[q] = r;
  ++pivots_since_refactor_;
}

void DenseSimplex::Refactor() {
  tab_ = original_;
  std::vector<int> cols = basis_;
  std::vector<char> assigned(m_, 0);
  std::vector<int> new_basis(m_, -1);
  std::fill(row_of_.begin(), row_of_.end(), -1);
  // Unit columns first so that the slack/artificial start costs nothing.
  std::stable_sort(cols.begin(), cols.end(),
                   [this](int a, int b) { return (a >= n_) > (b >= n_); });
  d_.assign(ncol_, 0.0);
  for (int c : cols) {
    int best = -1;
    double best_abs = 0.0;
    for (int i = 0; i < m_; ++i) {
      if (assigned[i]) continue;
      const double v = std::abs(T(i, c));
      if (v > best_abs) {
        best_abs = v;
        best = i;
      }
    }
    if (best < 0 || best_abs < kBreakdownTol) {
      throw Error(ErrorCode::kNumericalBreakdown,
                  "singular basis during refactorization");
    }
    assigned[best] = 1;
    basis_[best] = c;  // Pivot reads basis_[best] as the leaving column.
    Pivot(best, c);
    new_basis[best] = c;
  }
  basis_ = new_basis;
  for (int i = 0; i < m_; ++i) row_of_[basis_[i]] = i;
  pivots_since_refactor_ = 0;
  for (int j = 0; j < ncol_; ++j) {
    if (row_of_[j] < 0) x_[j] = NonbasicValue(j);
  }
  RecomputeBasics();
  RecomputeReducedCosts();
}

void DenseSimplex::RecomputeBasics() {
  std::vector<double> vals(m_);
  for (int i = 0; i < m_; ++i) vals[i] = T(i, rhs_col());
  for (int j = 0; j < ncol_; ++j) {
    if (row_of_[j] >= 0) continue;
    const double xj = x_[j];
    if (xj == 0.0) continue;
    for (int i = 0; i < m_; ++i) vals[i] -= T(i, j) * xj;
  }
  for (int i = 0; i < m_; ++i) x_[basis_[i]] = vals[i];
}

void DenseSimplex::RecomputeReducedCosts() {
  d_ = cost_;
  for (int i = 0; i < m_; ++i) {
    const double cb = cost_[basis_[i]];
    if (cb == 0.0) continue;
    const double* row = &tab_[static_cast<size_t>(i) * width_];
    for (int j = 0; j < ncol_; ++j) d_[j] -= cb * row[j];
  }
  for (int i = 0; i < m_; ++i) d_[basis_[i]] = 0.0;
}

DenseSimplex::Result DenseSimplex::PrimalLoop() {
  const double opt_tol = options_.optimality_tol;
  bool retried = false;
  while (true) {
    ++iterations_;
    if (iterations_ > options_.max_iterations || TimeUp()) {
      return Result::kIterationLimit;
    }
    if (pivots_since_refactor_ > std::max(200, m_)) Refactor();

    int q = -1;
    int dir = 0;
    double best_score = 0.0;
    for (int j = 0; j < ncol_; ++j) {
      if (row_of_[j] >= 0 || IsFixed(j)) continue;
      const double dj = d_[j];
      const bool can_inc = x_[j] < hi_[j];
      const bool can_dec = x_[j] > lo_[j];
      int jdir = 0;
      if (can_inc && dj < -opt_tol) jdir = 1;
      else if (can_dec && dj > opt_tol) jdir = -1;
      if (jdir == 0) continue;
      if (bland_) {
        q = j;
        dir = jdir;
        break;
      }
      const double score = std::abs(dj);
      if (score > best_score) {
        best_score = score;
        q = j;
        dir = jdir;
      }
    }
    if (q < 0) return Result::kOptimal;

    const double flip =
        (std::isfinite(hi_[q]) && std::isfinite(lo_[q])) ? hi_[q] - lo_[q] : kInfinity;
    int r = -1;
    double best_t = kInfinity;
    double best_alpha = 0.0;
    bool tiny_blockers = false;
    for (int i = 0; i < m_; ++i) {
      const double a = dir * T(i, q);
      const double abs_a = std::abs(a);
      if (abs_a <= kPivotTol) {
        if (abs_a > kBreakdownTol) tiny_blockers = true;
        continue;
      }
      const int p = basis_[i];
      double t;
      if (a > 0) {
        if (!std::isfinite(lo_[p])) continue;
        t = (x_[p] - lo_[p]) / a;
      } else {
        if (!std::isfinite(hi_[p])) continue;
        t = (hi_[p] - x_[p]) / -a;
      }
      t = std::max(t, 0.0);
      bool take = false;
      if (r < 0 || t < best_t - 1e-12) {
        take = true;
      } else if (t <= best_t + 1e-12) {
        take = bland_ ? p < basis_[r] : abs_a > best_alpha;
      }
      if (take) {
        r = i;
        best_t = t;
        best_alpha = abs_a;
      }
    }

    if (r < 0 && !std::isfinite(flip)) {
      if (tiny_blockers && !retried) {
        Refactor();
        retried = true;
        continue;
      }
      if (tiny_blockers) {
        throw Error(ErrorCode::kNumericalBreakdown,
                    "only pivots below tolerance block an unbounded ray");
      }
      return Result::kUnbounded;
    }
    retried = false;

    const double step = (r < 0 || flip <= best_t) ? flip : best_t;
    const double delta = dir * step;
    if (step != 0.0) {
      for (int i = 0; i < m_; ++i) {
        const double tq = T(i, q);
        if (tq != 0.0) x_[basis_[i]] -= tq * delta;
      }
    }
    if (step < 1e-12) {
      if (++degenerate_ > options_.bland_after) bland_ = true;
    }
    if (r < 0 || flip <= best_t) {
      at_upper_[q] = dir > 0;
      x_[q] = NonbasicValue(q);
      continue;
    }
    const int p = basis_[r];
    x_[q] += delta;
    const double a = dir * T(r, q);
    if (a > 0) {
      x_[p] = lo_[p];
      at_upper_[p] = 0;
    } else {
      x_[p] = hi_[p];
      at_upper_[p] = 1;
    }
    Pivot(r, q);
  }
}

void DenseSimplex::DriveOutArtificials() {
  const int first_art = n_ + m_;
  for (int i = 0; i < m_; ++i) {
    const int a = basis_[i];
    if (a < first_art) continue;
    int best = -1;
    double best_abs = 1e-7;
    for (int j = 0; j < first_art; ++j) {
      if (row_of_[j] >= 0) continue;
      const double v = std::abs(T(i, j));
      if (v > best_abs) {
        best_abs = v;
        best = j;
      }
    }
    if (best < 0) continue;  // redundant row; artificial stays basic at 0
    const double delta = x_[a] / T(i, best);
    if (delta != 0.0) {
      for (int k = 0; k < m_; ++k) {
        const double tq = T(k, best);
        if (tq != 0.0) x_[basis_[k]] -= tq * delta;
      }
      x_[best] += delta;
    }
    x_[a] = 0.0;
    Pivot(i, best);
  }
  for (int a = first_art; a < ncol_; ++a) {
    lo_[a] = 0.0;
    hi_[a] = 0.0;
    if (row_of_[a] < 0) x_[a] = 0.0;
  }
}

DenseSimplex::Result DenseSimplex::SolvePrimal() {
  if (ncol_ > n_ + m_) {
    // Phase I: minimize the sum of artificials.
    RecomputeReducedCosts();
    Result r = PrimalLoop();
    if (r == Result::kIterationLimit) return r;
    double infeas = 0.0;
    for (int a = n_ + m_; a < ncol_; ++a) infeas += x_[a];
    double scale = 1.0;
    for (int i = 0; i < m_; ++i) {
      scale = std::max(scale, std::abs(original_[static_cast<size_t>(i) * width_ + ncol_]));
    }
    if (infeas > options_.feasibility_tol * scale) return Result::kInfeasible;
    DriveOutArtificials();
  }
  cost_ = phase2_cost_;
  degenerate_ = 0;
  bland_ = false;
  Refactor();
  return PrimalLoop();
}

void DenseSimplex::SetBounds(int var, double lower, double upper) {
  lo_[var] = lower;
  hi_[var] = upper;
  if (row_of_[var] >= 0) return;
  if (d_[var] > options_.optimality_tol) {
    at_upper_[var] = 0;
  } else if (d_[var] < -options_.optimality_tol) {
    at_upper_[var] = 1;
  }
  if (at_upper_[var] && !std::isfinite(hi_[var])) at_upper_[var] = 0;
  if (!at_upper_[var] && !std::isfinite(lo_[var]) && std::isfinite(hi_[var])) {
    at_upper_[var] = 1;
  }
  x_[var] = NonbasicValue(var);
}

double DenseSimplex::Objective() const {
  double obj = 0.0;
  for (int j = 0; j < n_; ++j) obj += phase2_cost_[j] * x_[j];
  return obj;
}

DenseSimplex::Result DenseSimplex::SolveDual(double cutoff) {
  RecomputeBasics();
  const double feas_tol = options_.feasibility_tol;
  long dual_degenerate = 0;
  while (true) {
    ++iterations_;
    if (iterations_ > options_.max_iterations || TimeUp()) {
      return Result::kIterationLimit;
    }
    if (pivots_since_refactor_ > std::max(200, m_)) Refactor();

    int r = -1;
    double worst = feas_tol;
    for (int i = 0; i < m_; ++i) {
      const int p = basis_[i];
      const double v = x_[p];
      double viol = 0.0;
      if (v < lo_[p]) viol = lo_[p] - v;
      else if (v > hi_[p]) viol = v - hi_[p];
      if (viol > worst) {
        worst = viol;
        r = i;
      }
    }
    if (r < 0) return Result::kOptimal;
    if (std::isfinite(cutoff) && Objective() > cutoff) return Result::kCutoff;

    const int p = basis_[r];
    const bool to_lower = x_[p] < lo_[p];
    const bool bland = dual_degenerate > options_.bland_after;
    int q = -1;
    double best_ratio = kInfinity;
    double best_alpha = 0.0;
    for (int j = 0; j < ncol_; ++j) {
      if (row_of_[j] >= 0 || IsFixed(j)) continue;
      const double a = T(r, j);
      if (std::abs(a) <= kPivotTol) continue;
      const bool can_inc = x_[j] < hi_[j];
      const bool can_dec = x_[j] > lo_[j];
      bool ok;
      if (to_lower) {
        ok = (can_inc && a < 0) || (can_dec && a > 0);
      } else {
        ok = (can_inc && a > 0) || (can_dec && a < 0);
      }
      if (!ok) continue;
      const double ratio = std::abs(d_[j]) / std::abs(a);
      bool take = false;
      if (q < 0 || ratio < best_ratio - 1e-12) {
        take = true;
      } else if (ratio <= best_ratio + 1e-12) {
        take = bland ? false : std::abs(a) > best_alpha;
      }
      if (take) {
        q = j;
        best_ratio = ratio;
        best_alpha = std::abs(a);
      }
    }
    if (q < 0) return Result::kInfeasible;
    if (best_ratio < 1e-12) ++dual_degenerate;

    const double target = to_lower ? lo_[p] : hi_[p];
    const double delta = (x_[p] - target) / T(r, q);
    for (int i = 0; i < m_; ++i) {
      const double tq = T(i, q);
      if (tq != 0.0) x_[basis_[i]] -= tq * delta;
    }
    x_[q] += delta;
    x_[p] = target;
    at_upper_[p] = to_lower ? 0 : 1;
    Pivot(r, q);
  }
}

std::vector<double> DenseSimplex::Primal() const {
  return std::vector<double>(x_.begin(), x_.begin() + n_);
}

std::vector<double> DenseSimplex::Duals() const {
  std::vector<double> y(m_);
  for (int i = 0; i < m_; ++i) y[i] = -d_[n_ + i];
  return y;
}

std::vector<double> DenseSimplex::ReducedCosts() const {
  return std::vector<double>(d_.begin(), d_.begin() + n_);
}

void DenseSimplex::Dump(std::ostream& out) const {
  out << "tableau " << m_ << " rows x " << ncol_ << " cols\n";
  for (int i = 0; i < m_; ++i) {
    out << "row " << i << " basic " << basis_[i] << " value " << x_[basis_[i]] << ":";
    for (int j = 0; j < width_; ++j) out << ' ' << T(i, j);
    out << '\n';
  }
  out << "reduced costs:";
  for (int j = 0; j < ncol_; ++j) out << ' ' << d_[j];
  out << '\n';
}

}  // namespace ifdp::internal
