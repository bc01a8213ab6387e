#pragma once

#include <string>
#include <vector>

#include "gsp/cut.hpp"
#include "gsp/graph.hpp"
#include "gsp/l1.hpp"
#include "gsp/rational.hpp"

namespace gsp {

inline constexpr int kXiBruteForceCap = 20;
inline constexpr double kBoundsTol = 1e-7;

// min xi(S) over all nonempty proper S; brute force, n <= 20.
Rational xi_min(const Graph& g);
// Cheeger constant: min xi(S) restricted to |S| <= floor(n/2).
Rational isoperimetric(const Graph& g);

struct BoundRecord {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
  double slack = 0.0;  // rhs - lhs
  bool exact = false;  // compared in rational arithmetic
  bool partial = false;  // checked against the heuristic upper bound only
  std::string note;
};

struct BoundsReport {
  int n = 0, m = 0;
  int d_min = 0, d_max = 0;
  double a = 0.0, lambda_max = 0.0;
  bool b_is_exact = false;
  Rational b;            // valid when b_is_exact
  Rational b_upper;      // heuristic upper bound, always present
  Cut witness;           // sparsest cut when exact, min-cut side otherwise
  int mc = 0;
  int mincut_side_size = 0;
  bool xi_available = false;
  Rational xi_min_value;
  Rational isoperimetric_value;
  std::vector<BoundRecord> records;
  std::vector<std::string> notes;
  bool all_hold() const {
    for (const auto& r : records)
      if (!r.holds) return false;
    return true;
  }
};

// One record per stated inequality between b, a, lambda_max, cut ratios,
// degrees, and the minimum cut. Lower bounds on b are only evaluated when b
// is exact; over the cap they are dropped with a note and the remaining
// records are marked partial.
BoundsReport bounds_report(const Graph& g, int cap = kDefaultEnumerationCap,
                           double tol = kBoundsTol, double spectral_tol = 1e-10);

}  // namespace gsp
