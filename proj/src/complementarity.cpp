#include "gsp/complementarity.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gsp {

ComplementarityModel export_complementarity_model(const Graph& g) {
  ComplementarityModel m;
  m.n = g.num_vertices();
  m.edges = g.edges();  // already sorted

  for (int j = 0; j < m.n; ++j) m.var_names.push_back("x1_" + std::to_string(j));
  for (int j = 0; j < m.n; ++j) m.var_names.push_back("x2_" + std::to_string(j));
  for (size_t e = 0; e < m.edges.size(); ++e) {
    auto [u, v] = m.edges[e];
    m.var_names.push_back("y_" + std::to_string(u) + "_" + std::to_string(v));
    m.objective_vars.push_back(m.y_index(static_cast<int>(e)));
  }

  // per edge:  (x1_u - x2_u - x1_v + x2_v) - y <= 0  and its negation
  for (size_t e = 0; e < m.edges.size(); ++e) {
    auto [u, v] = m.edges[e];
    for (int sign : {+1, -1}) {
      ModelConstraint c;
      c.terms = {{m.x1_index(u), 1.0 * sign}, {m.x2_index(u), -1.0 * sign},
                 {m.x1_index(v), -1.0 * sign}, {m.x2_index(v), 1.0 * sign},
                 {m.y_index(static_cast<int>(e)), -1.0}};
      c.relation = '<';
      c.rhs = 0.0;
      m.inequalities.push_back(std::move(c));
    }
  }

  for (int part = 0; part < 2; ++part) {
    ModelConstraint c;
    for (int j = 0; j < m.n; ++j)
      c.terms.push_back({part == 0 ? m.x1_index(j) : m.x2_index(j), 1.0});
    c.relation = '=';
    c.rhs = 0.5;
    m.equalities.push_back(std::move(c));
  }

  for (int j = 0; j < m.n; ++j)
    m.complementarity_pairs.emplace_back(m.x1_index(j), m.x2_index(j));

  m.nonnegative.assign(m.num_vars(), true);
  for (size_t e = 0; e < m.edges.size(); ++e)
    m.nonnegative[m.y_index(static_cast<int>(e))] = false;

  return m;
}

namespace {

std::string render_terms(const ComplementarityModel& m, const std::vector<LinearTerm>& terms) {
  std::ostringstream out;
  for (size_t i = 0; i < terms.size(); ++i) {
    double c = terms[i].coeff;
    out << (c < 0 ? "- " : "+ ");
    double mag = std::abs(c);
    if (mag != 1.0) out << mag << " ";
    out << m.var_names[terms[i].var];
    if (i + 1 < terms.size()) out << " ";
  }
  return out.str();
}

std::string render_rhs(double v) {
  if (v == 0.5) return "1/2";
  if (v == static_cast<long long>(v)) return std::to_string(static_cast<long long>(v));
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace

std::string render_complementarity_model(const ComplementarityModel& m) {
  std::ostringstream out;
  out << "VARIABLES\n";
  for (const auto& name : m.var_names) out << "  " << name << "\n";
  out << "MINIMIZE\n  ";
  for (size_t i = 0; i < m.objective_vars.size(); ++i) {
    out << "+ " << m.var_names[m.objective_vars[i]];
    if (i + 1 < m.objective_vars.size()) out << " ";
  }
  out << "\nSUBJECT_TO\n";
  for (const auto& c : m.inequalities)
    out << "  " << render_terms(m, c.terms) << " <= " << render_rhs(c.rhs) << "\n";
  for (const auto& c : m.equalities)
    out << "  " << render_terms(m, c.terms) << " = " << render_rhs(c.rhs) << "\n";
  out << "COMPLEMENTARITY\n";
  for (auto [a, b] : m.complementarity_pairs)
    out << "  " << m.var_names[a] << " * " << m.var_names[b] << " = 0\n";
  out << "BOUNDS\n";
  for (int v = 0; v < m.num_vars(); ++v)
    out << "  " << m.var_names[v] << (m.nonnegative[v] ? " >= 0" : " free") << "\n";
  return out.str();
}

ModelCheckResult check_model(const ComplementarityModel& m, const std::vector<double>& x1,
                             const std::vector<double>& x2, const std::vector<double>& y,
                             double tol) {
  if (static_cast<int>(x1.size()) != m.n || static_cast<int>(x2.size()) != m.n ||
      y.size() != m.edges.size())
    throw std::invalid_argument("check_model: dimension mismatch");

  std::vector<double> z;
  z.insert(z.end(), x1.begin(), x1.end());
  z.insert(z.end(), x2.begin(), x2.end());
  z.insert(z.end(), y.begin(), y.end());

  ModelCheckResult r;
  r.linear_feasible = true;
  double worst = 0.0;
  auto eval = [&](const ModelConstraint& c) {
    double lhs = 0.0;
    for (const auto& t : c.terms) lhs += t.coeff * z[t.var];
    double viol = (c.relation == '<') ? lhs - c.rhs : std::abs(lhs - c.rhs);
    if (viol > worst) worst = viol;
    if (viol > tol) r.linear_feasible = false;
  };
  for (const auto& c : m.inequalities) eval(c);
  for (const auto& c : m.equalities) eval(c);
  for (int v = 0; v < m.num_vars(); ++v) {
    if (!m.nonnegative[v]) continue;
    double viol = -z[v];
    if (viol > worst) worst = viol;
    if (viol > tol) r.linear_feasible = false;
  }

  r.complementarity_ok = true;
  for (auto [a, b] : m.complementarity_pairs) {
    double viol = std::abs(z[a] * z[b]);
    if (viol > worst) worst = viol;
    if (viol > tol) r.complementarity_ok = false;
  }

  r.max_violation = worst;
  for (int v : m.objective_vars) r.objective += z[v];
  return r;
}

}  // namespace gsp
