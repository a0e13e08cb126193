// Copyright 2026 The Ordlab Authors.
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

#ifndef ORDINAL_LP_HPP_
#define ORDINAL_LP_HPP_

#include <stdexcept>
#include <vector>

#include "ordinal/rational.hpp"

namespace ordinal {

// Dense exact-rational simplex for the small dominance programs this
// library generates. Two phases, Bland's rule for anti-cycling, no
// tolerances anywhere.

struct LinearProgram {
  // maximize objective . x  subject to  rows[k] . x == rhs[k], x >= 0
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;
};

struct LpResult {
  enum class Status { kOptimal, kUnbounded, kInfeasible };
  Status status = Status::kInfeasible;
  Rational objective;
  std::vector<Rational> solution;
};

namespace lp_detail {

struct Tableau {
  int m = 0;
  int n = 0;
  std::vector<std::vector<Rational>> t;  // m rows of n coefficients + rhs
  std::vector<int> basis;                // basic variable per row

  void pivot(int row, int col) {
    const Rational p = t[row][col];
    for (auto& v : t[row]) v /= p;
    for (int r = 0; r < m; ++r) {
      if (r == row || t[r][col] == 0) continue;
      const Rational f = t[r][col];
      for (int j = 0; j <= n; ++j) t[r][j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  // Maximizes cost . x from the current basic feasible point. Returns false
  // iff the objective is unbounded above.
  bool run(const std::vector<Rational>& cost) {
    for (;;) {
      // Reduced costs recomputed from scratch; the tableaus here are tiny.
      int enter = -1;
      for (int j = 0; j < n && enter < 0; ++j) {
        Rational d = cost[j];
        for (int r = 0; r < m; ++r)
          if (t[r][j] != 0) d -= cost[basis[r]] * t[r][j];
        if (d > 0) enter = j;  // Bland: first improving index
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int r = 0; r < m; ++r) {
        if (t[r][enter] <= 0) continue;
        Rational ratio = t[r][n] / t[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace lp_detail

inline LpResult solve_lp(const LinearProgram& lp) {
  const int m = static_cast<int>(lp.rows.size());
  const int n = static_cast<int>(lp.objective.size());
  lp_detail::Tableau tab;
  tab.m = m;
  tab.n = n + m;  // artificials appended
  tab.t.assign(m, std::vector<Rational>(tab.n + 1, Rational(0)));
  tab.basis.resize(m);
  for (int r = 0; r < m; ++r) {
    if (static_cast<int>(lp.rows[r].size()) != n)
      throw std::invalid_argument("lp row width mismatch");
    const bool flip = lp.rhs[r] < 0;
    for (int j = 0; j < n; ++j)
      tab.t[r][j] = flip ? -lp.rows[r][j] : lp.rows[r][j];
    tab.t[r][tab.n] = flip ? -lp.rhs[r] : lp.rhs[r];
    tab.t[r][n + r] = 1;
    tab.basis[r] = n + r;
  }

  LpResult result;
  // Phase 1: drive the artificials to zero.
  std::vector<Rational> phase1(tab.n, Rational(0));
  for (int r = 0; r < m; ++r) phase1[n + r] = -1;
  tab.run(phase1);  // bounded by construction (objective <= 0)
  Rational infeas(0);
  for (int r = 0; r < m; ++r)
    if (tab.basis[r] >= n) infeas += tab.t[r][tab.n];
  if (infeas != 0) {
    result.status = LpResult::Status::kInfeasible;
    return result;
  }
  // Pivot any degenerate artificial out of the basis where possible.
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] < n) continue;
    int col = -1;
    for (int j = 0; j < n && col < 0; ++j)
      if (tab.t[r][j] != 0) col = j;
    if (col >= 0) tab.pivot(r, col);
    // An all-zero row is a redundant constraint; the artificial stays basic
    // at value zero and never re-enters because phase 2 ignores it.
  }

  std::vector<Rational> phase2(tab.n, Rational(0));
  for (int j = 0; j < n; ++j) phase2[j] = lp.objective[j];
  // Block artificials from re-entering.
  const bool bounded = [&] {
    // Temporarily treat artificial columns as absent by zeroing them.
    for (int r = 0; r < m; ++r)
      for (int a = n; a < tab.n; ++a)
        if (tab.basis[r] != a) tab.t[r][a] = 0;
    return tab.run(phase2);
  }();
  if (!bounded) {
    result.status = LpResult::Status::kUnbounded;
    return result;
  }
  result.status = LpResult::Status::kOptimal;
  result.solution.assign(n, Rational(0));
  for (int r = 0; r < m; ++r)
    if (tab.basis[r] < n) result.solution[tab.basis[r]] = tab.t[r][tab.n];
  result.objective = 0;
  for (int j = 0; j < n; ++j)
    result.objective += lp.objective[j] * result.solution[j];
  return result;
}

}  // namespace ordinal

#endif  // ORDINAL_LP_HPP_
