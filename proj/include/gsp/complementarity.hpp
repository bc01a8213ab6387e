#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gsp/graph.hpp"

namespace gsp {

// The split-variable model of the l1 smoothing problem: variables
// x1_j, x2_j (j < n) and one y per edge, with
//   minimize sum y_uv
//   x1_u - x2_u - x1_v + x2_v <= y_uv   and its negation   (per edge)
//   sum x1 = 1/2, sum x2 = 1/2
//   x1_j * x2_j = 0                     (complementarity pairs)
//   x1, x2 >= 0, y free.
// Exported for external solvers; never solved here.
struct LinearTerm {
  int var = 0;
  double coeff = 0.0;
};

struct ModelConstraint {
  std::vector<LinearTerm> terms;
  char relation = '<';  // '<' means <=, '=' means equality
  double rhs = 0.0;
};

struct ComplementarityModel {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> var_names;  // x1_0..x1_{n-1}, x2_0.., y_u_v in edge order
  std::vector<int> objective_vars;     // the y variables
  std::vector<ModelConstraint> inequalities;
  std::vector<ModelConstraint> equalities;
  std::vector<std::pair<int, int>> complementarity_pairs;  // (x1_j, x2_j)
  std::vector<bool> nonnegative;

  int x1_index(int j) const { return j; }
  int x2_index(int j) const { return n + j; }
  int y_index(int edge_pos) const { return 2 * n + edge_pos; }
  int num_vars() const { return 2 * n + static_cast<int>(edges.size()); }
};

ComplementarityModel export_complementarity_model(const Graph& g);

// Plain-text rendering with sections VARIABLES, MINIMIZE, SUBJECT_TO,
// COMPLEMENTARITY, BOUNDS; deterministic ordering.
std::string render_complementarity_model(const ComplementarityModel& m);

struct ModelCheckResult {
  bool linear_feasible = false;
  bool complementarity_ok = false;
  double max_violation = 0.0;
  double objective = 0.0;
  bool ok() const { return linear_feasible && complementarity_ok; }
};

// Evaluates a candidate (x1, x2, y) against every constraint.
ModelCheckResult check_model(const ComplementarityModel& m, const std::vector<double>& x1,
                             const std::vector<double>& x2, const std::vector<double>& y,
                             double tol);

}  // namespace gsp
