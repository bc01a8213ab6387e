#include "gsp/cut.hpp"

namespace gsp {

int boundary_size(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.num_vertices())
    throw std::invalid_argument("boundary_size: set universe mismatch");
  int count = 0;
  for (auto [u, v] : g.edges())
    if (s.contains(u) != s.contains(v)) ++count;
  return count;
}

Cut make_cut(const Graph& g, const VertexSet& s) {
  int n = g.num_vertices();
  if (s.universe() != n) throw std::invalid_argument("make_cut: set universe mismatch");
  int size = s.size();
  if (size == 0 || size == n)
    throw std::invalid_argument("make_cut: S must be a nonempty proper subset");

  Cut c;
  c.side = s;
  c.boundary_size = boundary_size(g, s);
  c.xi_s = Rational(c.boundary_size, size);
  c.xi_comp = Rational(c.boundary_size, n - size);
  c.rho = Rational(c.boundary_size, static_cast<long long>(size) * (n - size));
  return c;
}

}  // namespace gsp
