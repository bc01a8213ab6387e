#pragma once

#include "gsp/graph.hpp"
#include "gsp/rational.hpp"
#include "gsp/vertex_set.hpp"

namespace gsp {

// A vertex subset S with its boundary and the exact cut ratios:
//   xi_s    = |delta(S)| / |S|
//   xi_comp = |delta(S)| / (n - |S|)
//   rho     = |delta(S)| / (|S| (n - |S|))
struct Cut {
  VertexSet side;
  int boundary_size = 0;
  Rational xi_s;
  Rational xi_comp;
  Rational rho;
};

// Number of edges with exactly one endpoint in S.
int boundary_size(const Graph& g, const VertexSet& s);

// Requires a nonempty proper subset.
Cut make_cut(const Graph& g, const VertexSet& s);

}  // namespace gsp
