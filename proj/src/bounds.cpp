#include "gsp/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "gsp/mincut.hpp"
#include "gsp/spectral.hpp"
#include "mask_ops.hpp"

namespace gsp {

namespace {

Rational xi_scan(const Graph& g, bool restrict_half) {
  int n = g.num_vertices();
  if (n < 2) throw std::invalid_argument("xi_min: need at least 2 vertices");
  if (n > kXiBruteForceCap) throw CapExceeded("xi_min: n over brute-force cap");
  if (!is_connected(g)) throw std::invalid_argument("xi_min: graph must be connected");

  auto adj = g.adjacency_masks();
  std::uint64_t full = (std::uint64_t(1) << n) - 1;
  long long best_num = -1, best_den = 1;
  for (std::uint64_t s = 1; s < full; ++s) {
    int size = std::popcount(s);
    if (restrict_half && size > n / 2) continue;
    long long num = detail::mask_boundary(s, full & ~s, adj);
    if (best_num < 0 || num * best_den < best_num * size) {
      best_num = num;
      best_den = size;
    }
  }
  return Rational(best_num, best_den);
}

BoundRecord make_record(const std::string& name, double lhs, double rhs, double tol) {
  BoundRecord r;
  r.name = name;
  r.lhs = lhs;
  r.rhs = rhs;
  r.holds = lhs <= rhs + tol;
  r.slack = rhs - lhs;
  return r;
}

BoundRecord make_exact_record(const std::string& name, const Rational& lhs,
                              const Rational& rhs) {
  BoundRecord r;
  r.name = name;
  r.lhs = lhs.to_double();
  r.rhs = rhs.to_double();
  r.holds = lhs <= rhs;
  r.slack = r.rhs - r.lhs;
  r.exact = true;
  return r;
}

}  // namespace

Rational xi_min(const Graph& g) { return xi_scan(g, false); }
Rational isoperimetric(const Graph& g) { return xi_scan(g, true); }

BoundsReport bounds_report(const Graph& g, int cap, double tol, double spectral_tol) {
  int n = g.num_vertices();
  if (n < 2) throw std::invalid_argument("bounds_report: need at least 2 vertices");
  if (!is_connected(g)) throw std::invalid_argument("bounds_report: graph must be connected");

  BoundsReport rep;
  rep.n = n;
  rep.m = g.num_edges();
  auto ds = degree_stats(g);
  rep.d_min = ds.d_min;
  rep.d_max = ds.d_max;

  auto sr = analyze_spectral(g, spectral_tol);
  rep.a = sr.a;
  rep.lambda_max = sr.lambda_max;

  auto [mc, mc_side] = min_cut(g);
  rep.mc = mc;
  Cut mc_cut = make_cut(g, mc_side);
  rep.mincut_side_size = mc_cut.side.size();
  rep.b_upper = Rational(n, 2) * mc_cut.rho;

  rep.b_is_exact = n <= cap && n <= 64;
  if (rep.b_is_exact) {
    auto l1 = b_exact(g, cap);
    rep.b = l1.b;
    rep.witness = l1.sparsest;
  } else {
    rep.witness = mc_cut;
    rep.notes.push_back("n over enumeration cap: b records use the min-cut upper bound "
                        "and lower-bound records are dropped");
  }

  rep.xi_available = n <= kXiBruteForceCap;
  if (rep.xi_available) {
    rep.xi_min_value = xi_min(g);
    rep.isoperimetric_value = isoperimetric(g);
    rep.notes.push_back("xi_min ranges over all nonempty proper S; the isoperimetric "
                        "number restricts to |S| <= n/2");
  } else {
    rep.notes.push_back("n over xi brute-force cap: degree/cut-ratio records dropped");
  }

  bool exact = rep.b_is_exact;
  double b_float = exact ? rep.b.to_double() : rep.b_upper.to_double();
  double rho_witness = rep.witness.rho.to_double();

  // edge density of the witness against the eigenvalue window
  {
    BoundRecord lo = make_record("density-lower-eigen", rep.a / n, rho_witness, tol);
    BoundRecord hi = make_record("density-upper-eigen", rho_witness, rep.lambda_max / n, tol);
    if (!exact) {
      lo.note = hi.note = "evaluated at the min-cut side";
    }
    rep.records.push_back(lo);
    rep.records.push_back(hi);
  }

  // Cheeger-type bound on the minimum density; needs at least two edges
  if (rep.m >= 2) {
    double rhs = (2.0 / n) * std::sqrt(rep.a * (2.0 * rep.d_max - rep.a));
    double min_rho = exact ? (2.0 * b_float / n) : rho_witness;
    BoundRecord r = make_record("min-density-cheeger", min_rho, rhs, tol);
    if (!exact) {
      r.partial = true;
      r.note = "min density replaced by the min-cut side density (an upper bound)";
      if (!r.holds) r.note += "; inconclusive, not a refutation";
    }
    rep.records.push_back(r);
  } else {
    rep.notes.push_back("min-density-cheeger requires at least two edges; skipped");
  }

  // half the eigenvalue window around b
  if (exact) {
    rep.records.push_back(make_record("b-lower-half-a", rep.a / 2.0, b_float, tol));
    rep.records.push_back(make_record("b-upper-half-lambda", b_float, rep.lambda_max / 2.0, tol));
  } else {
    BoundRecord r = make_record("b-upper-half-lambda", b_float, rep.lambda_max / 2.0, tol);
    r.partial = true;
    r.note = "checked for the heuristic upper bound on b";
    rep.records.push_back(r);
  }

  // relative cut size below b, degree bound above it
  if (rep.xi_available) {
    Rational degree_rhs(static_cast<long long>(n) * rep.d_min, 2LL * (n - 1));
    if (exact) {
      rep.records.push_back(make_exact_record("b-lower-xi-min", rep.xi_min_value, rep.b));
      rep.records.push_back(make_exact_record("b-upper-degree", rep.b, degree_rhs));
    } else {
      BoundRecord r = make_exact_record("b-upper-degree", rep.b_upper, degree_rhs);
      r.partial = true;
      r.note = "checked for the heuristic upper bound on b";
      rep.records.push_back(r);
    }
  }

  // minimum-cut bound
  {
    int s = rep.mincut_side_size;
    Rational rhs(static_cast<long long>(n) * rep.mc, 2LL * s * (n - s));
    if (exact) {
      rep.records.push_back(make_exact_record("b-upper-mincut", rep.b, rhs));
    } else {
      BoundRecord r = make_exact_record("b-upper-mincut", rep.b_upper, rhs);
      r.partial = true;
      r.note = "heuristic upper bound equals this expression by construction";
      rep.records.push_back(r);
    }
  }

  // Cauchy-Schwarz bound through the Fiedler vector
  {
    double rhs = std::sqrt(static_cast<double>(rep.m) * rep.a);
    BoundRecord r = make_record("b-upper-sqrt-ma", b_float, rhs, tol);
    if (!exact) {
      r.partial = true;
      r.note = "checked for the heuristic upper bound on b";
    }
    rep.records.push_back(r);
  }

  return rep;
}

}  // namespace gsp
