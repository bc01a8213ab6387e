#include "gsp/smoothing.hpp"

#include <cmath>
#include <iostream>

namespace gsp {

std::string to_string(NormRegime r) {
  switch (r) {
    case NormRegime::L1: return "l1";
    case NormRegime::L2: return "l2";
    case NormRegime::LInf: return "linf";
  }
  return "?";
}

namespace {
void check_length(const Graph& g, size_t len, const char* who) {
  if (len != static_cast<size_t>(g.num_vertices()))
    throw std::invalid_argument(std::string(who) + ": vector length != vertex count");
}
}  // namespace

double f1(const Graph& g, const std::vector<double>& x) {
  check_length(g, x.size(), "f1");
  double s = 0.0;
  for (auto [u, v] : g.edges()) s += std::abs(x[u] - x[v]);
  return s;
}

Rational f1_exact(const Graph& g, const std::vector<Rational>& x) {
  check_length(g, x.size(), "f1_exact");
  Rational s(0);
  for (auto [u, v] : g.edges()) {
    Rational d = x[u] - x[v];
    s += (d < Rational(0)) ? -d : d;
  }
  return s;
}

double max_edge_difference(const Graph& g, const std::vector<double>& x) {
  check_length(g, x.size(), "max_edge_difference");
  double m = 0.0;
  for (auto [u, v] : g.edges()) m = std::max(m, std::abs(x[u] - x[v]));
  return m;
}

Rational max_edge_difference_exact(const Graph& g, const std::vector<Rational>& x) {
  check_length(g, x.size(), "max_edge_difference_exact");
  Rational m(0);
  for (auto [u, v] : g.edges()) {
    Rational d = x[u] - x[v];
    if (d < Rational(0)) d = -d;
    if (m < d) m = d;
  }
  return m;
}

double quadratic_form(const Graph& g, const std::vector<double>& x) {
  check_length(g, x.size(), "quadratic_form");
  double s = 0.0;
  for (auto [u, v] : g.edges()) {
    double d = x[u] - x[v];
    s += d * d;
  }
  return s;
}

bool is_feasible_l1(const std::vector<double>& x, double tol, L1FeasibilityDetail* detail) {
  L1FeasibilityDetail d;
  for (double v : x) {
    d.sum += v;
    d.norm1 += std::abs(v);
    if (v >= 0) d.pos_sum += v;
    if (v <= 0) d.neg_sum += v;
  }
  d.direct_ok = std::abs(d.sum) <= tol && std::abs(d.norm1 - 1.0) <= tol;
  d.split_ok = std::abs(d.pos_sum - 0.5) <= tol && std::abs(d.neg_sum + 0.5) <= tol;
  if (d.direct_ok != d.split_ok && detail == nullptr) {
    std::cerr << "is_feasible_l1: direct and split feasibility checks disagree"
              << " (sum=" << d.sum << " norm1=" << d.norm1 << " pos=" << d.pos_sum
              << " neg=" << d.neg_sum << ")\n";
  }
  if (detail) *detail = d;
  return d.direct_ok;
}

}  // namespace gsp
