#pragma once

#include <utility>
#include <vector>

#include "gsp/graph.hpp"
#include "gsp/rational.hpp"

namespace gsp {

bool is_tree(const Graph& g);

// Center edges of a tree: the edges minimizing the imbalance between the
// two component sizes left by their removal. Removing any center edge
// yields a sparsest cut, so b(T) follows directly.
struct CenterEdgeResult {
  std::vector<std::pair<int, int>> center_edges;
  int delta = 0;  // minimal imbalance | |V_u| - |V_v| |
  std::vector<std::pair<int, int>> component_sizes;  // (side of u, side of v) per center edge
  Rational b;
};

CenterEdgeResult center_edges(const Graph& t);

Rational b_tree(const Graph& t);

// True iff the given tree edges all share a common vertex (a single edge
// counts). Throws if an edge is not in the tree.
bool substar_check(const Graph& t, const std::vector<std::pair<int, int>>& edges);

}  // namespace gsp
