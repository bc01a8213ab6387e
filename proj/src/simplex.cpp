#include "gsp/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace gsp {

std::string to_string(LPStatus s) {
  switch (s) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::Unbounded: return "unbounded";
    case LPStatus::Breakdown: return "breakdown";
  }
  return "?";
}

namespace {

void validate(const LinearProgram& lp) {
  size_t n = lp.objective.size();
  if (lp.lower.size() != n || lp.upper.size() != n)
    throw std::invalid_argument("solve_lp: bounds dimension mismatch");
  if (lp.ineq_rows.size() != lp.ineq_rhs.size() || lp.eq_rows.size() != lp.eq_rhs.size())
    throw std::invalid_argument("solve_lp: rhs dimension mismatch");
  for (const auto& r : lp.ineq_rows)
    if (r.size() != n) throw std::invalid_argument("solve_lp: inequality row dimension mismatch");
  for (const auto& r : lp.eq_rows)
    if (r.size() != n) throw std::invalid_argument("solve_lp: equality row dimension mismatch");
  auto finite = [](double v) { return std::isfinite(v); };
  for (double v : lp.objective)
    if (!finite(v)) throw std::invalid_argument("solve_lp: non-finite objective coefficient");
  for (const auto& r : lp.ineq_rows)
    for (double v : r)
      if (!finite(v)) throw std::invalid_argument("solve_lp: non-finite coefficient");
  for (const auto& r : lp.eq_rows)
    for (double v : r)
      if (!finite(v)) throw std::invalid_argument("solve_lp: non-finite coefficient");
  for (double v : lp.ineq_rhs)
    if (!finite(v)) throw std::invalid_argument("solve_lp: non-finite rhs");
  for (double v : lp.eq_rhs)
    if (!finite(v)) throw std::invalid_argument("solve_lp: non-finite rhs");
}

// How an original variable maps onto the nonnegative standard-form ones.
struct VarMap {
  enum Kind { ShiftLb, FlipUb, Split } kind;
  int a = -1;     // primary standard-form column
  int b = -1;     // second column for Split
  double offset = 0.0;  // lb for ShiftLb, ub for FlipUb
};

struct Tableau {
  int rows = 0;
  int cols = 0;  // structural + slack (artificials appended later)
  std::vector<std::vector<double>> a;  // rows x cols
  std::vector<double> rhs;
  std::vector<int> basis;  // column basic in each row
};

constexpr int kNoPivot = -1;

bool tableau_finite(const Tableau& t) {
  for (const auto& row : t.a)
    for (double v : row)
      if (!std::isfinite(v)) return false;
  for (double v : t.rhs)
    if (!std::isfinite(v)) return false;
  return true;
}

void pivot(Tableau& t, std::vector<double>& cost, double& cost_shift, int r, int c) {
  double p = t.a[r][c];
  for (int j = 0; j < t.cols; ++j) t.a[r][j] /= p;
  t.rhs[r] /= p;
  t.a[r][c] = 1.0;
  for (int i = 0; i < t.rows; ++i) {
    if (i == r) continue;
    double f = t.a[i][c];
    if (f == 0.0) continue;
    for (int j = 0; j < t.cols; ++j) t.a[i][j] -= f * t.a[r][j];
    t.a[i][c] = 0.0;
    t.rhs[i] -= f * t.rhs[r];
  }
  double f = cost[c];
  if (f != 0.0) {
    for (int j = 0; j < t.cols; ++j) cost[j] -= f * t.a[r][j];
    cost[c] = 0.0;
    cost_shift -= f * t.rhs[r];
  }
  t.basis[r] = c;
}

// Runs Bland-rule simplex iterations on the current cost row. `banned`
// columns (spent artificials) never enter.
LPStatus run_simplex(Tableau& t, std::vector<double>& cost, double& cost_shift,
                     const std::vector<char>& banned, double tol, long max_iters) {
  for (long iter = 0; iter < max_iters; ++iter) {
    if (!tableau_finite(t)) return LPStatus::Breakdown;
    int enter = kNoPivot;
    for (int j = 0; j < t.cols; ++j) {
      if (banned[j]) continue;
      if (cost[j] < -tol) { enter = j; break; }  // Bland: smallest index
    }
    if (enter == kNoPivot) return LPStatus::Optimal;

    int leave = kNoPivot;
    double best_ratio = 0.0;
    for (int r = 0; r < t.rows; ++r) {
      if (t.a[r][enter] <= tol) continue;
      double ratio = t.rhs[r] / t.a[r][enter];
      if (leave == kNoPivot || ratio < best_ratio - tol ||
          (std::abs(ratio - best_ratio) <= tol && t.basis[r] < t.basis[leave]))
        { leave = r; best_ratio = ratio; }
    }
    if (leave == kNoPivot) return LPStatus::Unbounded;
    pivot(t, cost, cost_shift, leave, enter);
  }
  return LPStatus::Breakdown;
}

}  // namespace

LPSolution solve_lp(const LinearProgram& lp, double tol) {
  validate(lp);
  int n_orig = lp.num_vars();

  LPSolution sol;
  for (int j = 0; j < n_orig; ++j) {
    if (std::isfinite(lp.lower[j]) && std::isfinite(lp.upper[j]) && lp.lower[j] > lp.upper[j]) {
      sol.status = LPStatus::Infeasible;
      return sol;
    }
  }

  // 1. substitute bounds away so every standard-form variable is >= 0
  std::vector<VarMap> vmap(n_orig);
  int n_std = 0;
  for (int j = 0; j < n_orig; ++j) {
    if (std::isfinite(lp.lower[j])) {
      vmap[j] = {VarMap::ShiftLb, n_std++, -1, lp.lower[j]};
    } else if (std::isfinite(lp.upper[j])) {
      vmap[j] = {VarMap::FlipUb, n_std++, -1, lp.upper[j]};
    } else {
      vmap[j] = {VarMap::Split, n_std, n_std + 1, 0.0};
      n_std += 2;
    }
  }

  auto transform_row = [&](const std::vector<double>& row, double rhs,
                           std::vector<double>& out_row, double& out_rhs) {
    out_row.assign(n_std, 0.0);
    out_rhs = rhs;
    for (int j = 0; j < n_orig; ++j) {
      double c = row[j];
      if (c == 0.0) continue;
      switch (vmap[j].kind) {
        case VarMap::ShiftLb:
          out_row[vmap[j].a] += c;
          out_rhs -= c * vmap[j].offset;
          break;
        case VarMap::FlipUb:
          out_row[vmap[j].a] -= c;
          out_rhs -= c * vmap[j].offset;
          break;
        case VarMap::Split:
          out_row[vmap[j].a] += c;
          out_row[vmap[j].b] -= c;
          break;
      }
    }
  };

  std::vector<std::vector<double>> ineq_a;
  std::vector<double> ineq_b;
  for (size_t i = 0; i < lp.ineq_rows.size(); ++i) {
    std::vector<double> row;
    double rhs;
    transform_row(lp.ineq_rows[i], lp.ineq_rhs[i], row, rhs);
    ineq_a.push_back(std::move(row));
    ineq_b.push_back(rhs);
  }
  // finite two-sided bounds become explicit rows on the shifted variable
  for (int j = 0; j < n_orig; ++j) {
    if (vmap[j].kind == VarMap::ShiftLb && std::isfinite(lp.upper[j])) {
      std::vector<double> row(n_std, 0.0);
      row[vmap[j].a] = 1.0;
      ineq_a.push_back(std::move(row));
      ineq_b.push_back(lp.upper[j] - lp.lower[j]);
    }
  }
  std::vector<std::vector<double>> eq_a;
  std::vector<double> eq_b;
  for (size_t i = 0; i < lp.eq_rows.size(); ++i) {
    std::vector<double> row;
    double rhs;
    transform_row(lp.eq_rows[i], lp.eq_rhs[i], row, rhs);
    eq_a.push_back(std::move(row));
    eq_b.push_back(rhs);
  }

  int n_ineq = static_cast<int>(ineq_a.size());
  int n_rows = n_ineq + static_cast<int>(eq_a.size());
  int n_slack = n_ineq;

  Tableau t;
  t.rows = n_rows;
  t.cols = n_std + n_slack;
  t.a.assign(n_rows, std::vector<double>(t.cols, 0.0));
  t.rhs.assign(n_rows, 0.0);
  t.basis.assign(n_rows, -1);
  for (int i = 0; i < n_ineq; ++i) {
    for (int j = 0; j < n_std; ++j) t.a[i][j] = ineq_a[i][j];
    t.a[i][n_std + i] = 1.0;
    t.rhs[i] = ineq_b[i];
  }
  for (size_t i = 0; i < eq_a.size(); ++i) {
    int r = n_ineq + static_cast<int>(i);
    for (int j = 0; j < n_std; ++j) t.a[r][j] = eq_a[i][j];
    t.rhs[r] = eq_b[i];
  }
  for (int r = 0; r < n_rows; ++r) {
    if (t.rhs[r] < 0.0) {
      for (int j = 0; j < t.cols; ++j) t.a[r][j] = -t.a[r][j];
      t.rhs[r] = -t.rhs[r];
    }
  }

  // 2. phase 1: slack serves as the basic column where it survived the sign
  // flip; otherwise append an artificial
  std::vector<int> artificial_rows;
  for (int r = 0; r < n_rows; ++r) {
    if (r < n_ineq && t.a[r][n_std + r] == 1.0) {
      t.basis[r] = n_std + r;
    } else {
      artificial_rows.push_back(r);
    }
  }
  int n_art = static_cast<int>(artificial_rows.size());
  int art_base = t.cols;
  t.cols += n_art;
  for (auto& row : t.a) row.resize(t.cols, 0.0);
  for (int k = 0; k < n_art; ++k) {
    int r = artificial_rows[k];
    t.a[r][art_base + k] = 1.0;
    t.basis[r] = art_base + k;
  }

  long max_iters = 2000 + 200L * (t.rows + t.cols);
  std::vector<char> banned(t.cols, 0);

  if (n_art > 0) {
    // reduced costs of  minimize sum(artificials)
    std::vector<double> cost(t.cols, 0.0);
    double cost_shift = 0.0;
    for (int k = 0; k < n_art; ++k) cost[art_base + k] = 1.0;
    for (int k = 0; k < n_art; ++k) {
      int r = artificial_rows[k];
      for (int j = 0; j < t.cols; ++j) cost[j] -= t.a[r][j];
      cost_shift -= t.rhs[r];
    }

    LPStatus st = run_simplex(t, cost, cost_shift, banned, tol, max_iters);
    if (st == LPStatus::Breakdown) { sol.status = st; return sol; }
    double phase1 = -cost_shift;  // current value of sum(artificials)
    if (st == LPStatus::Unbounded || phase1 > 100 * tol) {
      sol.status = st == LPStatus::Unbounded ? LPStatus::Breakdown : LPStatus::Infeasible;
      return sol;
    }

    // drive leftover artificials out of the basis; all-zero rows are
    // redundant and harmless to keep once the artificial is banned
    for (int r = 0; r < t.rows; ++r) {
      if (t.basis[r] < art_base) continue;
      int c = kNoPivot;
      for (int j = 0; j < art_base; ++j)
        if (std::abs(t.a[r][j]) > tol) { c = j; break; }
      if (c != kNoPivot) {
        std::vector<double> dummy(t.cols, 0.0);
        double dummy_shift = 0.0;
        pivot(t, dummy, dummy_shift, r, c);
      }
    }
    for (int k = 0; k < n_art; ++k) banned[art_base + k] = 1;
  }

  // 3. phase 2 with the real objective on the standard-form variables
  std::vector<double> cost(t.cols, 0.0);
  double cost_shift = 0.0;
  for (int j = 0; j < n_orig; ++j) {
    double c = lp.objective[j];
    if (c == 0.0) continue;
    switch (vmap[j].kind) {
      case VarMap::ShiftLb: cost[vmap[j].a] += c; break;
      case VarMap::FlipUb: cost[vmap[j].a] -= c; break;
      case VarMap::Split:
        cost[vmap[j].a] += c;
        cost[vmap[j].b] -= c;
        break;
    }
  }
  for (int r = 0; r < t.rows; ++r) {
    int bc = t.basis[r];
    double f = cost[bc];
    if (f == 0.0) continue;
    for (int j = 0; j < t.cols; ++j) cost[j] -= f * t.a[r][j];
    cost[bc] = 0.0;
    cost_shift -= f * t.rhs[r];
  }

  LPStatus st = run_simplex(t, cost, cost_shift, banned, tol, max_iters);
  if (st != LPStatus::Optimal) { sol.status = st; return sol; }

  // 4. read the standard-form solution back through the variable map
  std::vector<double> u(t.cols, 0.0);
  for (int r = 0; r < t.rows; ++r) u[t.basis[r]] = t.rhs[r];
  sol.z.assign(n_orig, 0.0);
  for (int j = 0; j < n_orig; ++j) {
    switch (vmap[j].kind) {
      case VarMap::ShiftLb: sol.z[j] = vmap[j].offset + u[vmap[j].a]; break;
      case VarMap::FlipUb: sol.z[j] = vmap[j].offset - u[vmap[j].a]; break;
      case VarMap::Split: sol.z[j] = u[vmap[j].a] - u[vmap[j].b]; break;
    }
  }
  sol.objective_value = 0.0;
  for (int j = 0; j < n_orig; ++j) sol.objective_value += lp.objective[j] * sol.z[j];
  sol.status = LPStatus::Optimal;
  return sol;
}

}  // namespace gsp
