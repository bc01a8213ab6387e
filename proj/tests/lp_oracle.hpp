#pragma once

// Basic-feasible-solution enumeration oracle for small LPs, plus the random
// box-bounded instance generator it is exercised with. Every choice of
// active constraints that pins down all variables is solved exactly and
// screened for feasibility; independent of the simplex path.

#include <cmath>
#include <random>
#include <vector>

#include "gsp/simplex.hpp"
#include "test_support.hpp"

namespace testsupport {

struct OracleReport {
  bool feasible = false;
  double value = 0.0;
};

inline bool solve_square(std::vector<std::vector<double>> a, std::vector<double> b,
                         std::vector<double>& x) {
  int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) < 1e-11) return false;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  x.resize(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

inline OracleReport vertex_enumeration_oracle(const gsp::LinearProgram& lp, double tol) {
  int n = lp.num_vars();
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  for (size_t i = 0; i < lp.ineq_rows.size(); ++i) {
    rows.push_back(lp.ineq_rows[i]);
    rhs.push_back(lp.ineq_rhs[i]);
  }
  for (int j = 0; j < n; ++j) {
    if (std::isfinite(lp.lower[j])) {
      std::vector<double> r(n, 0.0);
      r[j] = 1.0;
      rows.push_back(r);
      rhs.push_back(lp.lower[j]);
    }
    if (std::isfinite(lp.upper[j])) {
      std::vector<double> r(n, 0.0);
      r[j] = 1.0;
      rows.push_back(r);
      rhs.push_back(lp.upper[j]);
    }
  }
  int pool = static_cast<int>(rows.size());
  int need = n - static_cast<int>(lp.eq_rows.size());
  OracleReport best;
  if (need < 0) return best;

  auto feasible = [&](const std::vector<double>& z) {
    for (size_t i = 0; i < lp.ineq_rows.size(); ++i) {
      double v = 0.0;
      for (int j = 0; j < n; ++j) v += lp.ineq_rows[i][j] * z[j];
      if (v > lp.ineq_rhs[i] + tol) return false;
    }
    for (size_t i = 0; i < lp.eq_rows.size(); ++i) {
      double v = 0.0;
      for (int j = 0; j < n; ++j) v += lp.eq_rows[i][j] * z[j];
      if (std::abs(v - lp.eq_rhs[i]) > tol) return false;
    }
    for (int j = 0; j < n; ++j)
      if (z[j] < lp.lower[j] - tol || z[j] > lp.upper[j] + tol) return false;
    return true;
  };

  std::vector<int> idx(need);
  for (int i = 0; i < need; ++i) idx[i] = i;
  bool done = pool < need;
  while (!done) {
    std::vector<std::vector<double>> a = lp.eq_rows;
    std::vector<double> b = lp.eq_rhs;
    for (int i = 0; i < need; ++i) {
      a.push_back(rows[idx[i]]);
      b.push_back(rhs[idx[i]]);
    }
    std::vector<double> z;
    if (static_cast<int>(a.size()) == n && solve_square(a, b, z) && feasible(z)) {
      double val = 0.0;
      for (int j = 0; j < n; ++j) val += lp.objective[j] * z[j];
      if (!best.feasible || val < best.value) {
        best.feasible = true;
        best.value = val;
      }
    }
    if (need == 0) break;
    int i = need - 1;
    while (i >= 0 && idx[i] == pool - need + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int k = i + 1; k < need; ++k) idx[k] = idx[k - 1] + 1;
  }
  return best;
}

inline gsp::LinearProgram random_box_lp(std::mt19937_64& rng, int max_vars) {
  int n = 1 + static_cast<int>(rng() % max_vars);
  gsp::LinearProgram lp(n);
  for (int j = 0; j < n; ++j) {
    lp.objective[j] = 4.0 * unit(rng) - 2.0;
    lp.lower[j] = -1.0 - unit(rng);
    lp.upper[j] = 1.0 + unit(rng);
  }
  int n_ineq = 1 + static_cast<int>(rng() % 5);
  for (int i = 0; i < n_ineq; ++i) {
    std::vector<double> row(n);
    for (double& v : row) v = 4.0 * unit(rng) - 2.0;
    lp.add_inequality(row, 3.0 * unit(rng) - 1.0);
  }
  if (rng() % 3 == 0) {
    std::vector<double> row(n);
    for (double& v : row) v = 2.0 * unit(rng) - 1.0;
    lp.add_equality(row, unit(rng) - 0.5);
  }
  return lp;
}

}  // namespace testsupport
