#pragma once

#include <vector>

#include "gsp/graph.hpp"
#include "gsp/simplex.hpp"
#include "gsp/smoothing.hpp"

namespace gsp {

struct LinfResult {
  double gamma = 0.0;
  SmoothingVector x;  // LInf regime; x[argmin_k] = 1
  int argmin_k = 0;
};

// LP(k): variables (x_0..x_{n-1}, y); per edge x_i - x_j <= y and
// -(x_i - x_j) <= y; sum x = 0; -1 <= x_j <= 1; x_k = 1; minimize y.
LinearProgram build_lp_k(const Graph& g, int k);

// Solves LP(k) for every k and keeps the smallest optimum (smallest k on
// ties). Requires a connected graph with at least 2 vertices.
LinfResult gamma(const Graph& g, double tol = kLpTol);

// gamma(P_n) = 2/(n-1) with the arithmetic-progression optimum.
struct PathLinf {
  double gamma = 0.0;
  std::vector<double> x;
};
PathLinf gamma_path_closed_form(int n);

}  // namespace gsp
