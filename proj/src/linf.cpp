#include "gsp/linf.hpp"

#include <stdexcept>
#include <string>

namespace gsp {

LinearProgram build_lp_k(const Graph& g, int k) {
  int n = g.num_vertices();
  if (k < 0 || k >= n) throw std::invalid_argument("build_lp_k: k out of range");

  LinearProgram lp(n + 1);  // x_0..x_{n-1}, then y
  int y = n;
  lp.objective[y] = 1.0;

  for (auto [i, j] : g.edges()) {
    std::vector<double> row(n + 1, 0.0);
    row[i] = 1.0;
    row[j] = -1.0;
    row[y] = -1.0;
    lp.add_inequality(row, 0.0);
    row[i] = -1.0;
    row[j] = 1.0;
    lp.add_inequality(row, 0.0);
  }
  {
    std::vector<double> row(n + 1, 0.0);
    for (int j = 0; j < n; ++j) row[j] = 1.0;
    lp.add_equality(row, 0.0);
  }
  for (int j = 0; j < n; ++j) {
    lp.lower[j] = -1.0;
    lp.upper[j] = 1.0;
  }
  lp.lower[k] = 1.0;
  lp.upper[k] = 1.0;
  return lp;
}

LinfResult gamma(const Graph& g, double tol) {
  int n = g.num_vertices();
  if (n < 2) throw std::invalid_argument("gamma: need at least 2 vertices");
  if (!is_connected(g)) throw std::invalid_argument("gamma: graph must be connected");

  LinfResult best;
  bool have = false;
  for (int k = 0; k < n; ++k) {
    LPSolution s = solve_lp(build_lp_k(g, k), tol);
    if (s.status != LPStatus::Optimal)
      throw std::runtime_error("gamma: LP(" + std::to_string(k) +
                               ") failed: " + to_string(s.status));
    if (!have || s.objective_value < best.gamma) {
      have = true;
      best.gamma = s.objective_value;
      best.argmin_k = k;
      best.x.values.assign(s.z.begin(), s.z.begin() + n);
    }
  }
  best.x.regime = NormRegime::LInf;
  best.x.objective = max_edge_difference(g, best.x.values);
  return best;
}

PathLinf gamma_path_closed_form(int n) {
  if (n < 2) throw std::invalid_argument("gamma_path_closed_form: n >= 2 required");
  PathLinf r;
  r.gamma = 2.0 / (n - 1);
  r.x.resize(n);
  for (int i = 0; i < n; ++i) r.x[i] = 1.0 - i * r.gamma;
  r.x[n - 1] = -1.0;
  return r;
}

}  // namespace gsp
