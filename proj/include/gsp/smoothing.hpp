#pragma once

#include <string>
#include <vector>

#include "gsp/graph.hpp"
#include "gsp/rational.hpp"

namespace gsp {

enum class NormRegime { L1, L2, LInf };

std::string to_string(NormRegime r);

// Vertex-indexed vector together with the norm regime it was produced
// under. `objective` is the regime's smoothing objective: sum of absolute
// edge differences (L1), the Laplacian quadratic form (L2), or the maximum
// absolute edge difference (LInf).
struct SmoothingVector {
  std::vector<double> values;
  NormRegime regime = NormRegime::L1;
  double objective = 0.0;
};

// Sum over edges of |x_u - x_v|.
double f1(const Graph& g, const std::vector<double>& x);
Rational f1_exact(const Graph& g, const std::vector<Rational>& x);

// Max over edges of |x_u - x_v|.
double max_edge_difference(const Graph& g, const std::vector<double>& x);
Rational max_edge_difference_exact(const Graph& g, const std::vector<Rational>& x);

// Laplacian quadratic form, sum over edges of (x_u - x_v)^2.
double quadratic_form(const Graph& g, const std::vector<double>& x);

struct L1FeasibilityDetail {
  double sum = 0.0;        // sum of components
  double norm1 = 0.0;      // l1 norm
  double pos_sum = 0.0;    // sum over components >= 0
  double neg_sum = 0.0;    // sum over components <= 0
  bool direct_ok = false;  // |sum| <= tol and |norm1 - 1| <= tol
  bool split_ok = false;   // |pos_sum - 1/2| <= tol and |neg_sum + 1/2| <= tol
};

// True iff sum(x) = 0 and ||x||_1 = 1 within tol. Also evaluates the
// equivalent half/half split of the positive and negative parts; if the two
// checks disagree beyond tol, a warning goes to stderr (or into `detail`
// when supplied).
bool is_feasible_l1(const std::vector<double>& x, double tol,
                    L1FeasibilityDetail* detail = nullptr);

}  // namespace gsp
