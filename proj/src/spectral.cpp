#include "gsp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gsp {

namespace {

double offdiag_norm(const Matrix& a) {
  double s = 0.0;
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j) s += a[i][j] * a[i][j];
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition eig_symmetric(const Matrix& m, double tol) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("eig_symmetric: matrix not square");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (std::abs(m[i][j] - m[j][i]) > tol)
        throw std::invalid_argument("eig_symmetric: matrix not symmetric within tol");

  Matrix a = m;
  Matrix v(n, std::vector<double>(n, 0.0));
  for (size_t i = 0; i < n; ++i) v[i][i] = 1.0;

  int sweep = 0;
  while (n > 1 && offdiag_norm(a) > tol) {
    if (++sweep > kJacobiSweepCap)
      throw std::runtime_error("eig_symmetric: no convergence within sweep cap");
    for (size_t p = 0; p + 1 < n; ++p) {
      for (size_t q = p + 1; q < n; ++q) {
        double apq = a[p][q];
        if (apq == 0.0) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;

        for (size_t k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (size_t k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (size_t k = 0; k < n; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t i, size_t j) { return a[i][i] < a[j][j]; });

  EigenDecomposition result;
  result.eigenvalues.reserve(n);
  result.eigenvectors.reserve(n);
  for (size_t idx : order) {
    result.eigenvalues.push_back(a[idx][idx]);
    std::vector<double> vec(n);
    for (size_t k = 0; k < n; ++k) vec[k] = v[k][idx];
    result.eigenvectors.push_back(std::move(vec));
  }
  return result;
}

Matrix laplacian_matrix(const Graph& g) {
  auto li = laplacian(g);
  Matrix m(li.size());
  for (size_t i = 0; i < li.size(); ++i) m[i].assign(li[i].begin(), li[i].end());
  return m;
}

double algebraic_connectivity(const Graph& g, double tol) {
  if (g.num_vertices() < 2)
    throw std::invalid_argument("algebraic_connectivity: need at least 2 vertices");
  auto eig = eig_symmetric(laplacian_matrix(g), tol);
  return eig.eigenvalues[1];
}

namespace {

SmoothingVector fiedler_from_eig(const Graph& g, const EigenDecomposition& eig, double tol) {
  std::vector<double> x = eig.eigenvectors[1];
  for (double c : x) {
    if (std::abs(c) > tol) {
      if (c < 0)
        for (double& xi : x) xi = -xi;
      break;
    }
  }
  SmoothingVector sv;
  sv.objective = quadratic_form(g, x);
  sv.values = std::move(x);
  sv.regime = NormRegime::L2;
  return sv;
}

VertexSet bisection_from_fiedler(const SmoothingVector& f, double tol) {
  int n = static_cast<int>(f.values.size());
  VertexSet s(n);
  bool any_signal = false;
  for (int v = 0; v < n; ++v) {
    if (std::abs(f.values[v]) > tol) any_signal = true;
    if (f.values[v] >= -tol) s.add(v);  // zeros join the positive side
  }
  if (!any_signal)
    throw std::runtime_error("spectral_bisection: Fiedler vector is numerically zero");
  if (s.empty() || s.full())
    throw std::runtime_error("spectral_bisection: degenerate sign split");
  return s;
}

}  // namespace

SmoothingVector fiedler_vector(const Graph& g, double tol) {
  if (!is_connected(g)) throw std::invalid_argument("fiedler_vector: graph must be connected");
  auto eig = eig_symmetric(laplacian_matrix(g), tol);
  return fiedler_from_eig(g, eig, tol);
}

VertexSet spectral_bisection(const Graph& g, double tol) {
  return bisection_from_fiedler(fiedler_vector(g, tol), tol);
}

SpectralResult analyze_spectral(const Graph& g, double tol) {
  if (!is_connected(g)) throw std::invalid_argument("analyze_spectral: graph must be connected");
  if (g.num_vertices() < 2)
    throw std::invalid_argument("analyze_spectral: need at least 2 vertices");
  auto eig = eig_symmetric(laplacian_matrix(g), tol);
  SpectralResult r;
  r.a = eig.eigenvalues[1];
  r.lambda_max = eig.eigenvalues.back();
  r.fiedler = fiedler_from_eig(g, eig, tol);
  r.bisection = bisection_from_fiedler(r.fiedler, tol);
  return r;
}

}  // namespace gsp
