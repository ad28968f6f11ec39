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

#ifndef IFDP_TESTS_LP_ORACLE_H_
#define IFDP_TESTS_LP_ORACLE_H_

#include <cmath>
#include <optional>
#include <vector>

#include "ifdp/lp.h"

namespace ifdp::testing {

struct Halfspace {
  std::vector<double> a;
  Relation rel;
  double b;
};

// Minimum of a bounded LP (all variable bounds finite) by enumerating every
// basic solution. Returns nullopt when infeasible.
inline std::optional<double> VertexEnumerationMinimum(const LpProblem& p) {
  const int n = p.variable_count();
  std::vector<Halfspace> cons;
  for (const LpRow& row : p.rows()) {
    Halfspace h{std::vector<double>(n, 0.0), row.relation, row.rhs};
    for (const LpTerm& t : row.terms) h.a[t.var] += t.coef;
    cons.push_back(h);
  }
  for (int j = 0; j < n; ++j) {
    Halfspace lo{std::vector<double>(n, 0.0), Relation::kGreaterEqual, p.lower()[j]};
    lo.a[j] = 1.0;
    Halfspace hi{std::vector<double>(n, 0.0), Relation::kLessEqual, p.upper()[j]};
    hi.a[j] = 1.0;
    cons.push_back(lo);
    cons.push_back(hi);
  }
  auto feasible = [&](const std::vector<double>& x) {
    for (const Halfspace& h : cons) {
      double lhs = 0.0;
      for (int j = 0; j < n; ++j) lhs += h.a[j] * x[j];
      const double tol = 1e-7 * (1.0 + std::abs(h.b));
      if (h.rel == Relation::kLessEqual && lhs > h.b + tol) return false;
      if (h.rel == Relation::kGreaterEqual && lhs < h.b - tol) return false;
      if (h.rel == Relation::kEqual && std::abs(lhs - h.b) > tol) return false;
    }
    return true;
  };
  std::optional<double> best;
  const int m = static_cast<int>(cons.size());
  std::vector<int> pick;
  // Solve the square system of the picked constraints by Gaussian elimination.
  auto solve = [&]() -> std::optional<std::vector<double>> {
    std::vector<std::vector<double>> M(n, std::vector<double>(n + 1));
    for (int r = 0; r < n; ++r) {
      for (int j = 0; j < n; ++j) M[r][j] = cons[pick[r]].a[j];
      M[r][n] = cons[pick[r]].b;
    }
    for (int c = 0; c < n; ++c) {
      int piv = c;
      for (int r = c + 1; r < n; ++r) {
        if (std::abs(M[r][c]) > std::abs(M[piv][c])) piv = r;
      }
      if (std::abs(M[piv][c]) < 1e-10) return std::nullopt;
      std::swap(M[piv], M[c]);
      for (int r = 0; r < n; ++r) {
        if (r == c) continue;
        const double f = M[r][c] / M[c][c];
        for (int j = c; j <= n; ++j) M[r][j] -= f * M[c][j];
      }
    }
    std::vector<double> x(n);
    for (int r = 0; r < n; ++r) x[r] = M[r][n] / M[r][r];
    return x;
  };
  std::vector<int> eq;
  for (int i = 0; i < m; ++i) {
    if (cons[i].rel == Relation::kEqual) eq.push_back(i);
  }
  // Enumerate n-subsets that contain every equality row.
  std::vector<int> ineq;
  for (int i = 0; i < m; ++i) {
    if (cons[i].rel != Relation::kEqual) ineq.push_back(i);
  }
  const int need = n - static_cast<int>(eq.size());
  if (need < 0) return std::nullopt;  // only used on small well-posed tests
  std::vector<int> idx(need);
  for (int i = 0; i < need; ++i) idx[i] = i;
  while (true) {
    if (need <= static_cast<int>(ineq.size())) {
      pick = eq;
      for (int i : idx) pick.push_back(ineq[i]);
      if (auto x = solve(); x && feasible(*x)) {
        double obj = 0.0;
        for (int j = 0; j < n; ++j) obj += p.cost()[j] * (*x)[j];
        if (!best || obj < *best) best = obj;
      }
    }
    int i = need - 1;
    while (i >= 0 && idx[i] == static_cast<int>(ineq.size()) - need + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

}  // namespace ifdp::testing

#endif  // IFDP_TESTS_LP_ORACLE_H_
