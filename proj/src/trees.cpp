#include "gsp/trees.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace gsp {

bool is_tree(const Graph& g) {
  return g.num_edges() == g.num_vertices() - 1 && is_connected(g);
}

CenterEdgeResult center_edges(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("center_edges: input is not a tree");
  int n = t.num_vertices();
  if (n < 2) throw std::invalid_argument("center_edges: need at least 2 vertices");

  // subtree sizes from root 0, iterative DFS
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  {
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      order.push_back(u);
      for (int w : t.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = u;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<int> subtree(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) subtree[parent[*it]] += subtree[*it];

  CenterEdgeResult r;
  r.delta = n;  // upper bound; real imbalance is at most n - 2
  for (auto [u, v] : t.edges()) {
    int child = (parent[v] == u) ? v : u;
    int s = subtree[child];
    r.delta = std::min(r.delta, std::abs(n - 2 * s));
  }
  for (auto [u, v] : t.edges()) {
    int child = (parent[v] == u) ? v : u;
    int s = subtree[child];
    if (std::abs(n - 2 * s) != r.delta) continue;
    r.center_edges.emplace_back(u, v);
    int side_u = (child == u) ? s : n - s;
    r.component_sizes.emplace_back(side_u, n - side_u);
  }

  auto [su, sv] = r.component_sizes.front();
  r.b = Rational(1, 2) * (Rational(1, su) + Rational(1, sv));
  return r;
}

Rational b_tree(const Graph& t) { return center_edges(t).b; }

bool substar_check(const Graph& t, const std::vector<std::pair<int, int>>& edges) {
  if (!is_tree(t)) throw std::invalid_argument("substar_check: input is not a tree");
  if (edges.empty()) throw std::invalid_argument("substar_check: empty edge set");
  for (auto [u, v] : edges)
    if (!t.has_edge(u, v)) throw std::invalid_argument("substar_check: edge not in tree");
  if (edges.size() == 1) return true;

  // intersect the endpoint sets edge by edge
  int a = edges[0].first, b = edges[0].second;
  for (size_t i = 1; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    int na = (a == u || a == v) ? a : -1;
    int nb = (b == u || b == v) ? b : -1;
    a = na;
    b = nb;
    if (a < 0 && b < 0) return false;
  }
  return true;
}

}  // namespace gsp
