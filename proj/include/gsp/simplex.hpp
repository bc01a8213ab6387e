#pragma once

#include <limits>
#include <string>
#include <vector>

namespace gsp {

inline constexpr double kLpInfinity = std::numeric_limits<double>::infinity();
inline constexpr double kLpTol = 1e-9;

// Dense LP:  minimize objective . z
//   subject to  ineq_rows[i] . z <= ineq_rhs[i]
//               eq_rows[i]   . z  = eq_rhs[i]
//               lower[j] <= z[j] <= upper[j]   (+-infinity allowed)
struct LinearProgram {
  std::vector<double> objective;
  std::vector<std::vector<double>> ineq_rows;
  std::vector<double> ineq_rhs;
  std::vector<std::vector<double>> eq_rows;
  std::vector<double> eq_rhs;
  std::vector<double> lower;
  std::vector<double> upper;

  explicit LinearProgram(int num_vars = 0)
      : objective(num_vars, 0.0),
        lower(num_vars, -kLpInfinity),
        upper(num_vars, kLpInfinity) {}

  int num_vars() const { return static_cast<int>(objective.size()); }

  void add_inequality(std::vector<double> row, double rhs) {
    ineq_rows.push_back(std::move(row));
    ineq_rhs.push_back(rhs);
  }
  void add_equality(std::vector<double> row, double rhs) {
    eq_rows.push_back(std::move(row));
    eq_rhs.push_back(rhs);
  }
};

enum class LPStatus { Optimal, Infeasible, Unbounded, Breakdown };

std::string to_string(LPStatus s);

struct LPSolution {
  LPStatus status = LPStatus::Breakdown;
  std::vector<double> z;
  double objective_value = 0.0;
};

// Two-phase primal simplex on the standard-form conversion (slacks for
// inequalities, bound shifting, free-variable splitting), Bland's rule
// throughout. Breakdown is returned when the tableau turns non-finite or
// the iteration cap is hit.
LPSolution solve_lp(const LinearProgram& lp, double tol = kLpTol);

}  // namespace gsp
