#pragma once

#include <vector>

#include "gsp/graph.hpp"
#include "gsp/smoothing.hpp"
#include "gsp/vertex_set.hpp"

namespace gsp {

using Matrix = std::vector<std::vector<double>>;

struct EigenDecomposition {
  std::vector<double> eigenvalues;          // ascending
  std::vector<std::vector<double>> eigenvectors;  // eigenvectors[i] pairs with eigenvalues[i]
};

inline constexpr double kSpectralTol = 1e-10;
inline constexpr int kJacobiSweepCap = 100;

// Cyclic Jacobi rotations, iterated until the Frobenius norm of the
// off-diagonal part drops below tol. Throws on non-symmetric input and on
// failure to converge within the sweep cap.
EigenDecomposition eig_symmetric(const Matrix& m, double tol = kSpectralTol);

// Second smallest Laplacian eigenvalue; requires n >= 2.
double algebraic_connectivity(const Graph& g, double tol = kSpectralTol);

// Unit eigenvector for the algebraic connectivity, sign-normalized so the
// first component larger than tol in magnitude is positive. Requires a
// connected graph.
SmoothingVector fiedler_vector(const Graph& g, double tol = kSpectralTol);

// S = vertices with nonnegative Fiedler component (components within tol of
// zero go to the positive side).
VertexSet spectral_bisection(const Graph& g, double tol = kSpectralTol);

struct SpectralResult {
  double a = 0.0;
  double lambda_max = 0.0;
  SmoothingVector fiedler;
  VertexSet bisection;
};

// One eigendecomposition shared by all four quantities.
SpectralResult analyze_spectral(const Graph& g, double tol = kSpectralTol);

Matrix laplacian_matrix(const Graph& g);

}  // namespace gsp
